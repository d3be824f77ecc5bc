#pragma once

#include <string>
#include <vector>

#include "uqgln/matrix.hpp"
#include "uqgln/rational.hpp"

namespace uqgln {

/// Sample point of the trigonometric R-matrix. Construction rejects q = 0
/// and the pole qu - q^{-1}v = 0.
struct RPoint {
  int N;
  Rational u, v, q;
  RPoint(int N_, Rational u_, Rational v_, Rational q_);
};

/// The three coefficient families of R(u,v): diagonal 1, middle
/// (u-v)/(qu-q^{-1}v), and exchange (q-q^{-1})/(qu-q^{-1}v) weighted by u or v.
struct RCoefficients {
  Rational mid;
  Rational exch_u;
  Rational exch_v;
};
RCoefficients r_coefficients(const Rational& u, const Rational& v, const Rational& q);

/// The N^2 x N^2 trigonometric R-matrix, first tensor slot slowest.
OpMatrix build_r(const RPoint& p);

/// Negative-control fixture: one exchange coefficient deliberately off by 1.
OpMatrix build_r_corrupted(const RPoint& p);

/// R acting on legs (j, i) of (C^N)^{⊗M}, 1-based legs, leg 1 slowest.
/// The first slot of R (the one carrying u) sits on leg j.
OpMatrix r_on_legs(int N, int M, int leg_j, int leg_i, const Rational& u, const Rational& v,
                   const Rational& q, bool corrupt = false);

/// In-place application of R^{(ji)}(u,v) to a state on (C^N)^{⊗M} ⊗ V,
/// module dimension `dim` on the fastest index.
void apply_r_legs(std::vector<Rational>& state, int N, int M, int dim, int leg_j, int leg_i,
                  const Rational& u, const Rational& v, const Rational& q);

struct YbeResult {
  bool ok = true;
  std::string detail;  // first mismatching basis column and coordinate
};

/// Exact Yang-Baxter check R12(u,v)R13(u,w)R23(v,w) = R23 R13 R12 on C^N ⊗ C^N ⊗ C^N.
YbeResult check_ybe(int N, const Rational& q, const Rational& u, const Rational& v, const Rational& w,
                    bool corrupt = false);

/// (j, i) factor order of the ordered R-product: (M,M-1), (M,M-2), ..., (2,1).
/// R^{(ji)} stands left of R^{(ml)} iff j > m, or j = m and i > l.
std::vector<std::pair<int, int>> r_product_pair_order(int M);

/// The ordered product of R-matrices on (C^N)^{⊗M} evaluated at u_1..u_M.
OpMatrix build_r_product(int N, const Rational& q, const std::vector<Rational>& us);

}  // namespace uqgln
