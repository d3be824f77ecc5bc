#include "uqgln/l_operator.hpp"

#include "uqgln/errors.hpp"
#include "uqgln/rmatrix.hpp"

namespace uqgln {

OpMatrix LOperatorPoly::block(int i, int j, const Rational& t) const {
  OpMatrix out = coeff[0].at(i - 1, j - 1);
  Rational p(1);
  const Rational step = sign == LSign::plus ? t.inverse() : t;
  for (int k = 1; k <= deg; ++k) {
    p *= step;
    out += p * coeff[static_cast<size_t>(k)].at(i - 1, j - 1);
  }
  return out;
}

BlockGrid LOperatorPoly::eval_grid(const Rational& t) const {
  BlockGrid g(N, N, dim);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) g.at(i - 1, j - 1) = block(i, j, t);
  return g;
}

LOperatorPoly eval_l(const ModuleRep& m, const Rational& z, LSign sign) {
  if (z.is_zero()) throw ConfigError("evaluation point z must be nonzero");
  const Rational qm = m.q - m.q.inverse();
  BlockGrid lp(m.N, m.N, m.dim), lm(m.N, m.N, m.dim);
  for (int a = 1; a <= m.N; ++a) {
    lp.at(a - 1, a - 1) = m.cartan(a);
    lm.at(a - 1, a - 1) = m.cartan_inv(a);
    for (int b = a + 1; b <= m.N; ++b) {
      // L^+_{a,b} = (q - q^{-1}) E_{b,a} E_{b,b},  a < b
      lp.at(a - 1, b - 1) = qm * (composed_lowering(m, b, a) * m.cartan(b));
      // L^-_{b,a} = (q^{-1} - q) E_{b,b}^{-1} E_{a,b},  row b > column a
      lm.at(b - 1, a - 1) = (-qm) * (m.cartan_inv(b) * composed_raising(m, a, b));
    }
  }
  LOperatorPoly l;
  l.sign = sign;
  l.N = m.N;
  l.dim = m.dim;
  l.deg = 1;
  l.q = m.q;
  if (sign == LSign::plus) {
    l.coeff.push_back(lp);
    BlockGrid c1(m.N, m.N, m.dim);
    for (int i = 0; i < m.N; ++i)
      for (int j = 0; j < m.N; ++j) c1.at(i, j) = (-z) * lm.at(i, j);
    l.coeff.push_back(std::move(c1));
  } else {
    l.coeff.push_back(lm);
    BlockGrid c1(m.N, m.N, m.dim);
    const Rational f = -(z.inverse());
    for (int i = 0; i < m.N; ++i)
      for (int j = 0; j < m.N; ++j) c1.at(i, j) = f * lp.at(i, j);
    l.coeff.push_back(std::move(c1));
  }
  return l;
}

LOperatorPoly tensor_l(const LOperatorPoly& l1, const LOperatorPoly& l2) {
  if (l1.N != l2.N || l1.sign != l2.sign || l1.q != l2.q)
    throw DimensionError("tensor_l: operand mismatch");
  LOperatorPoly out;
  out.sign = l1.sign;
  out.N = l1.N;
  out.dim = l1.dim * l2.dim;
  out.deg = l1.deg + l2.deg;
  out.q = l1.q;
  out.coeff.assign(static_cast<size_t>(out.deg) + 1, BlockGrid(out.N, out.N, out.dim));
  for (int i = 0; i < out.N; ++i)
    for (int j = 0; j < out.N; ++j)
      for (int k = 0; k < out.N; ++k)
        for (int d1 = 0; d1 <= l1.deg; ++d1)
          for (int d2 = 0; d2 <= l2.deg; ++d2) {
            const OpMatrix& b1 = l1.coeff[static_cast<size_t>(d1)].at(k, j);
            const OpMatrix& b2 = l2.coeff[static_cast<size_t>(d2)].at(i, k);
            if (b1.is_zero() || b2.is_zero()) continue;
            out.coeff[static_cast<size_t>(d1 + d2)].at(i, j) += tensor_product(b1, b2);
          }
  return out;
}

namespace {

// L acting on (C^N ⊗ C^N) ⊗ V with the matrix leg on `leg` (0 or 1).
OpMatrix embed_l(const BlockGrid& g, int leg) {
  const int n = g.block_rows();
  const int d = g.inner_dim();
  const OpMatrix eyeN = OpMatrix::identity(n);
  OpMatrix out(n * n * d, n * n * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (g.at(i, j).is_zero()) continue;
      OpMatrix unit(n, n);
      unit.at(i, j) = Rational(1);
      const OpMatrix left = leg == 0 ? unit : eyeN;
      const OpMatrix right = leg == 0 ? eyeN : unit;
      out += tensor_product(tensor_product(left, right), g.at(i, j));
    }
  return out;
}

}  // namespace

CheckResult check_rll(const LOperatorPoly& la, const LOperatorPoly& lb, const Rational& q,
                      const Rational& u, const Rational& v) {
  if (la.N != lb.N || la.dim != lb.dim) throw DimensionError("check_rll: operand mismatch");
  const int n = la.N;
  const int d = la.dim;
  const OpMatrix rbig = tensor_product(r_on_legs(n, 2, 1, 2, u, v, q), OpMatrix::identity(d));
  const OpMatrix l1 = embed_l(la.eval_grid(u), 0);
  const OpMatrix l2 = embed_l(lb.eval_grid(v), 1);
  const OpMatrix lhs = rbig * (l1 * l2);
  const OpMatrix rhs = (l2 * l1) * rbig;
  if (lhs != rhs) {
    for (int i = 0; i < lhs.rows(); ++i)
      for (int j = 0; j < lhs.cols(); ++j)
        if (lhs.at(i, j) != rhs.at(i, j))
          return {false, "RLL mismatch at entry (" + std::to_string(i) + "," + std::to_string(j) +
                             "): lhs=" + lhs.at(i, j).str() + " rhs=" + rhs.at(i, j).str()};
  }
  return {};
}

CheckResult check_zero_mode_triangular(const LOperatorPoly& l) {
  for (int i = 0; i < l.N; ++i)
    for (int j = 0; j < l.N; ++j) {
      const bool must_vanish = l.sign == LSign::plus ? i > j : i < j;
      if (must_vanish && !l.coeff[0].at(i, j).is_zero())
        return {false, "zero mode not triangular at block (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")"};
    }
  return {};
}

CheckResult check_zero_mode_diagonal(const LOperatorPoly& lplus, const LOperatorPoly& lminus) {
  if (lplus.sign != LSign::plus || lminus.sign != LSign::minus)
    throw DimensionError("check_zero_mode_diagonal: wrong signs");
  const OpMatrix eye = OpMatrix::identity(lplus.dim);
  for (int k = 0; k < lplus.N; ++k)
    if (lplus.coeff[0].at(k, k) * lminus.coeff[0].at(k, k) != eye)
      return {false, "L^+_{k,k}[0] L^-_{k,k}[0] != 1 at k=" + std::to_string(k + 1)};
  return {};
}

ModuleWithL make_evaluation_module(int N, const Rational& q, const Rational& z) {
  ModuleWithL m;
  m.rep = vector_rep(N, q);
  m.lplus = eval_l(m.rep, z, LSign::plus);
  m.lminus = eval_l(m.rep, z, LSign::minus);
  m.z = z;
  m.factor_zs = {z};
  return m;
}

ModuleWithL make_tensor_module(int N, const Rational& q, const std::vector<Rational>& zs) {
  if (zs.empty()) throw ConfigError("tensor module needs at least one factor");
  ModuleWithL m = make_evaluation_module(N, q, zs[0]);
  for (size_t i = 1; i < zs.size(); ++i) {
    ModuleWithL f = make_evaluation_module(N, q, zs[i]);
    m.rep = tensor_module(m.rep, f.rep);
    m.lplus = tensor_l(m.lplus, f.lplus);
    m.lminus = tensor_l(m.lminus, f.lminus);
  }
  m.factor_zs = zs;
  if (zs.size() > 1) m.z.reset();
  return m;
}

}  // namespace uqgln
