#pragma once

#include <string>
#include <vector>

#include "uqgln/matrix.hpp"
#include "uqgln/rational.hpp"

namespace uqgln {

/// Finite-dimensional U_q(gl_N) module given by explicit generator matrices.
/// Index convention: algebra indices a, b are 1-based throughout.
struct ModuleRep {
  int N = 0;
  int dim = 0;
  Rational q;
  std::vector<OpMatrix> cart;      // E_{a,a},    a = 1..N
  std::vector<OpMatrix> cart_inv;  // E_{a,a}^{-1}
  std::vector<OpMatrix> raise;     // E_{a,a+1},  a = 1..N-1
  std::vector<OpMatrix> lower;     // E_{a+1,a},  a = 1..N-1
  std::vector<Rational> singular;  // highest-weight vector
  std::vector<long> weights;       // Lambda_a as integer exponents: E_{a,a} v = q^{Lambda_a} v

  const OpMatrix& cartan(int a) const { return cart[static_cast<size_t>(a - 1)]; }
  const OpMatrix& cartan_inv(int a) const { return cart_inv[static_cast<size_t>(a - 1)]; }
  const OpMatrix& raising(int a) const { return raise[static_cast<size_t>(a - 1)]; }
  const OpMatrix& lowering(int a) const { return lower[static_cast<size_t>(a - 1)]; }
};

/// The N-dimensional vector representation on basis e_1..e_N with
/// E_{a,a} = diag(q^{delta_ab}), matrix units off the diagonal, singular
/// vector e_1 and weights (1, 0, ..., 0).
ModuleRep vector_rep(int N, const Rational& q);

/// Module on the tensor product, generators via the Chevalley coproduct;
/// singular vector and weights multiply/add.
ModuleRep tensor_module(const ModuleRep& m1, const ModuleRep& m2);

/// Composed lowering generator E_{c,a}, c > a, through E_{c,b}E_{b,a} - q^{-1}E_{b,a}E_{c,b}.
OpMatrix composed_lowering(const ModuleRep& m, int c, int a);
OpMatrix composed_lowering_via(const ModuleRep& m, int c, int a, int b);

/// Composed raising generator E_{a,c}, a < c, through E_{a,b}E_{b,c} - q E_{b,c}E_{a,b}.
OpMatrix composed_raising(const ModuleRep& m, int a, int c);
OpMatrix composed_raising_via(const ModuleRep& m, int a, int c, int b);

/// E_{r,c} for any pair: Cartan on the diagonal, composed roots off it.
OpMatrix gen_entry(const ModuleRep& m, int r, int c);

struct CheckResult {
  bool ok = true;
  std::string detail;
};

/// E_{a,a} E_{b,c} E_{a,a}^{-1} = q^{delta_ab - delta_ac} E_{b,c} for all stored generators.
CheckResult check_cartan_conjugation(const ModuleRep& m);

/// [E_{a,a+1}, E_{b+1,b}] = delta_ab (E_{a,a}E_{a+1,a+1}^{-1} - E_{a,a}^{-1}E_{a+1,a+1})/(q - q^{-1}).
CheckResult check_chevalley_bracket(const ModuleRep& m);

/// Quantum Serre relations between adjacent raising (resp. lowering) generators.
CheckResult check_serre(const ModuleRep& m);

/// Singular vector: annihilated by every E_{a,a+1}, E_{a,a}-eigenvalues q^{Lambda_a}.
CheckResult check_singular_vector(const ModuleRep& m);

/// Composed roots do not depend on the intermediate index.
CheckResult check_composed_root_independence(const ModuleRep& m);

/// Runs all of the above.
CheckResult check_module(const ModuleRep& m);

}  // namespace uqgln
