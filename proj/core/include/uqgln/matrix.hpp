#pragma once

#include <vector>

#include "uqgln/rational.hpp"

namespace uqgln {

/// Dense matrix of exact rationals, row-major, 0-based entry access.
/// Operator legs are ordered so the first tensor factor is the
/// slowest-varying index.
class OpMatrix {
 public:
  OpMatrix() = default;
  OpMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static OpMatrix identity(int n);
  static OpMatrix zero(int rows, int cols) { return OpMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  OpMatrix& operator+=(const OpMatrix& o);
  OpMatrix& operator-=(const OpMatrix& o);
  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
  friend OpMatrix operator*(const Rational& c, OpMatrix m);
  friend bool operator==(const OpMatrix& a, const OpMatrix& b);
  friend bool operator!=(const OpMatrix& a, const OpMatrix& b) { return !(a == b); }

  Rational trace() const;

  /// Applies the matrix to a coordinate vector.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product with the first factor on the slower-varying index:
/// (a ⊗ b)(v ⊗ w) = (a v) ⊗ (b w).
OpMatrix tensor_product(const OpMatrix& a, const OpMatrix& b);

/// Traces out the auxiliary legs of an operator on (⊗_k C^{aux_dims[k]}) ⊗ V,
/// keeping the trailing keep_dim-dimensional leg.
OpMatrix partial_trace_aux(const OpMatrix& big, const std::vector<int>& aux_dims, int keep_dim);

/// Exact two-sided inverse by Gauss-Jordan elimination.
/// Throws SingularError when no nonzero pivot exists.
OpMatrix invert(const OpMatrix& a);

/// Grid of equal-sized square blocks; the carrier for L-operator entries.
class BlockGrid {
 public:
  BlockGrid() = default;
  BlockGrid(int block_rows, int block_cols, int inner_dim);

  int block_rows() const { return block_rows_; }
  int block_cols() const { return block_cols_; }
  int inner_dim() const { return inner_; }

  OpMatrix& at(int i, int j) { return blocks_[static_cast<size_t>(i) * block_cols_ + j]; }
  const OpMatrix& at(int i, int j) const { return blocks_[static_cast<size_t>(i) * block_cols_ + j]; }

  /// Assembles the single matrix with block (I,J) at offset (I·d, J·d).
  OpMatrix flatten() const;
  static BlockGrid unflatten(const OpMatrix& m, int block_rows, int block_cols);

  friend bool operator==(const BlockGrid& a, const BlockGrid& b);
  friend bool operator!=(const BlockGrid& a, const BlockGrid& b) { return !(a == b); }

 private:
  int block_rows_ = 0;
  int block_cols_ = 0;
  int inner_ = 0;
  std::vector<OpMatrix> blocks_;
};

/// acc += c * x, coordinate-wise.
void axpy(std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& x);

bool vec_is_zero(const std::vector<Rational>& v);

}  // namespace uqgln
