#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqgln/gln_rep.hpp"
#include "uqgln/matrix.hpp"

namespace uqgln {

enum class LSign { plus, minus };

/// L-operator on a module, stored as a polynomial grid:
/// sign plus  : L^+(u) = sum_k coeff[k] u^{-k}
/// sign minus : L^-(u) = sum_k coeff[k] u^{+k}
struct LOperatorPoly {
  LSign sign = LSign::plus;
  int N = 0;
  int dim = 0;
  int deg = 0;
  Rational q;
  std::vector<BlockGrid> coeff;  // deg + 1 grids of N x N blocks, dim x dim each

  /// Block L_{i,j}(t), algebra indices 1-based.
  OpMatrix block(int i, int j, const Rational& t) const;

  /// All blocks evaluated at t.
  BlockGrid eval_grid(const Rational& t) const;
};

/// Evaluation L-operators of the module at spectral point z:
/// plus: coeff[0] = L^+ constant, coeff[1] = -z L^-;
/// minus: coeff[0] = L^-, coeff[1] = -(1/z) L^+.
LOperatorPoly eval_l(const ModuleRep& m, const Rational& z, LSign sign);

/// Coproduct L-operator on the tensor module:
/// Delta(L_{i,j}(u)) = sum_k L_{k,j}(u) ⊗ L_{i,k}(u).
LOperatorPoly tensor_l(const LOperatorPoly& l1, const LOperatorPoly& l2);

/// Exact RLL exchange check
/// R(u,v)(L^{s1}(u) ⊗ 1)(1 ⊗ L^{s2}(v)) = (1 ⊗ L^{s2}(v))(L^{s1}(u) ⊗ 1)R(u,v)
/// on C^N ⊗ C^N ⊗ V.
CheckResult check_rll(const LOperatorPoly& la, const LOperatorPoly& lb, const Rational& q,
                      const Rational& u, const Rational& v);

/// Zero-mode triangularity: the constant term of L^+ vanishes below the
/// diagonal, of L^- above it.
CheckResult check_zero_mode_triangular(const LOperatorPoly& l);

/// L^+_{k,k}[0] L^-_{k,k}[0] = identity for operators built on one module.
CheckResult check_zero_mode_diagonal(const LOperatorPoly& lplus, const LOperatorPoly& lminus);

/// A module together with both attached L-operators; z is set for a single
/// evaluation module and empty for tensor products.
struct ModuleWithL {
  ModuleRep rep;
  LOperatorPoly lplus;
  LOperatorPoly lminus;
  std::optional<Rational> z;
  std::vector<Rational> factor_zs;  // evaluation points of the tensor factors
};

/// Vector-representation evaluation module at z.
ModuleWithL make_evaluation_module(int N, const Rational& q, const Rational& z);

/// Tensor product of vector-representation evaluation modules at zs.
ModuleWithL make_tensor_module(int N, const Rational& q, const std::vector<Rational>& zs);

}  // namespace uqgln
