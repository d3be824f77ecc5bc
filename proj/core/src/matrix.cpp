#include "uqgln/matrix.hpp"

#include "uqgln/errors.hpp"

namespace uqgln {

OpMatrix OpMatrix::identity(int n) {
  OpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool OpMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix mul shape mismatch");
  OpMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

OpMatrix operator*(const Rational& c, OpMatrix m) {
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) *= c;
  return m;
}

bool operator==(const OpMatrix& a, const OpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.data_ == b.data_;
}

Rational OpMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<Rational> OpMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionError("matrix apply shape mismatch");
  std::vector<Rational> y(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (a.is_zero() || x[static_cast<size_t>(j)].is_zero()) continue;
      y[static_cast<size_t>(i)] += a * x[static_cast<size_t>(j)];
    }
  }
  return y;
}

OpMatrix tensor_product(const OpMatrix& a, const OpMatrix& b) {
  OpMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const Rational& aij = a.at(i1, j1);
      if (aij.is_zero()) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2) {
          const Rational& bij = b.at(i2, j2);
          if (bij.is_zero()) continue;
          c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * bij;
        }
    }
  return c;
}

OpMatrix partial_trace_aux(const OpMatrix& big, const std::vector<int>& aux_dims, int keep_dim) {
  long aux_total = 1;
  for (int d : aux_dims) {
    if (d <= 0) throw DimensionError("partial trace: nonpositive aux dimension");
    aux_total *= d;
  }
  const long dim = aux_total * keep_dim;
  if (!big.is_square() || big.rows() != dim)
    throw DimensionError("partial trace: operand is not (prod aux)*keep dimensional");
  OpMatrix out(keep_dim, keep_dim);
  for (long alpha = 0; alpha < aux_total; ++alpha) {
    const long base = alpha * keep_dim;
    for (int m = 0; m < keep_dim; ++m)
      for (int mp = 0; mp < keep_dim; ++mp)
        out.at(m, mp) += big.at(static_cast<int>(base + m), static_cast<int>(base + mp));
  }
  return out;
}

OpMatrix invert(const OpMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  const int n = a.rows();
  OpMatrix work = a;
  OpMatrix inv = OpMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularError("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational scale = work.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const Rational f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

BlockGrid::BlockGrid(int block_rows, int block_cols, int inner_dim)
    : block_rows_(block_rows), block_cols_(block_cols), inner_(inner_dim) {
  blocks_.assign(static_cast<size_t>(block_rows) * block_cols, OpMatrix(inner_dim, inner_dim));
}

OpMatrix BlockGrid::flatten() const {
  OpMatrix m(block_rows_ * inner_, block_cols_ * inner_);
  for (int bi = 0; bi < block_rows_; ++bi)
    for (int bj = 0; bj < block_cols_; ++bj) {
      const OpMatrix& blk = at(bi, bj);
      for (int i = 0; i < inner_; ++i)
        for (int j = 0; j < inner_; ++j) m.at(bi * inner_ + i, bj * inner_ + j) = blk.at(i, j);
    }
  return m;
}

BlockGrid BlockGrid::unflatten(const OpMatrix& m, int block_rows, int block_cols) {
  if (block_rows <= 0 || block_cols <= 0 || m.rows() % block_rows != 0 || m.cols() % block_cols != 0)
    throw DimensionError("unflatten: block shape does not divide matrix shape");
  const int d = m.rows() / block_rows;
  if (m.cols() / block_cols != d) throw DimensionError("unflatten: blocks are not square");
  BlockGrid g(block_rows, block_cols, d);
  for (int bi = 0; bi < block_rows; ++bi)
    for (int bj = 0; bj < block_cols; ++bj)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(bi, bj).at(i, j) = m.at(bi * d + i, bj * d + j);
  return g;
}

bool operator==(const BlockGrid& a, const BlockGrid& b) {
  return a.block_rows_ == b.block_rows_ && a.block_cols_ == b.block_cols_ && a.inner_ == b.inner_ &&
         a.blocks_ == b.blocks_;
}

void axpy(std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& x) {
  if (acc.size() != x.size()) throw DimensionError("axpy size mismatch");
  if (c.is_zero()) return;
  for (size_t i = 0; i < acc.size(); ++i) {
    if (x[i].is_zero()) continue;
    acc[i] += c * x[i];
  }
}

bool vec_is_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace uqgln
