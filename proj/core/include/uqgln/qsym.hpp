#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uqgln/rational.hpp"
#include "uqgln/rng.hpp"

namespace uqgln {

/// Counts of Bethe variables per type a = 1..N-1.
struct Composition {
  int N = 0;
  std::vector<int> n;  // size N-1

  int count(int a) const { return n[static_cast<size_t>(a - 1)]; }
  int total() const;
};

/// A point assignment for the typed variable set t^a_l; values are looked up
/// 1-based as in the formulas.
struct VariableAssignment {
  std::vector<std::vector<Rational>> t;  // t[a-1][l-1]

  const Rational& at(int a, int l) const { return t[static_cast<size_t>(a - 1)][static_cast<size_t>(l - 1)]; }
  std::vector<Rational> values() const;
};

/// Per-type permutation tuple sigma in S_{n_1} x ... x S_{N-1}; images 0-based.
using PermTuple = std::vector<std::vector<int>>;

/// Applies the tuple: position l of type a receives t^a_{sigma^a(l)}.
VariableAssignment permuted(const VariableAssignment& t, const PermTuple& sigma);

/// Calls fn for every element of S_{n_1} x ... x S_{n_{N-1}}, in a fixed order.
void for_each_perm(const Composition& c, const std::function<void(const PermTuple&)>& fn);

/// Lower-triangular admissible matrix: row b holds s^b_1 <= ... <= s^b_b and
/// column a sums to n_a over rows b = a..N-1. Accessor honours s^b_0 = 0.
struct AdmissibleS {
  int N = 0;
  std::vector<std::vector<int>> rows;  // rows[b-1] has b entries

  int at(int b, int a) const {
    if (a == 0) return 0;
    return rows[static_cast<size_t>(b - 1)][static_cast<size_t>(a - 1)];
  }
  std::string str() const;
};

/// Upper-triangular admissible matrix: row b holds m^b_b >= ... >= m^b_{N-1}
/// and column a sums to n_a over rows b = 1..a. Accessor honours m^b_N = 0.
struct AdmissibleM {
  int N = 0;
  std::vector<std::vector<int>> rows;  // rows[b-1] has N-b entries, columns b..N-1

  int at(int b, int a) const {
    if (a == N) return 0;
    return rows[static_cast<size_t>(b - 1)][static_cast<size_t>(a - b)];
  }
  std::string str() const;
};

/// Complete, duplicate-free enumerations.
std::vector<AdmissibleS> enumerate_admissible_s(const Composition& c);
std::vector<AdmissibleM> enumerate_admissible_m(const Composition& c);

/// Prefix sums: bold m^b_a = m^1_a + ... + m^b_a, with bold m^0 = 0.
int prefix_m(const AdmissibleM& m, int b, int a);
/// bold s^j_a = s^j_a + s^{j+1}_a + ... + s^{N-1}_a, with bold s^N = 0.
int prefix_s(const AdmissibleS& s, int j, int a);
/// s-tilde^b_a = s^a_a + s^{a+1}_a + ... + s^{b-1}_a (empty sum for b = a).
int stilde(const AdmissibleS& s, int b, int a);

/// [n]_q = (q^n - q^{-n})/(q - q^{-1}) and its factorial with [0]_q! = 1.
Rational qint(int n, const Rational& q);
Rational qint_factorial(int n, const Rational& q);

/// Product of the twisted-transposition factors of sigma, per type:
/// prod over inversions of (q t_{s(l')} - q^{-1} t_{s(l)}) / (q^{-1} t_{s(l')} - q t_{s(l)}).
Rational inversion_factor(const Composition& c, const VariableAssignment& t, const Rational& q,
                          const PermTuple& sigma);

/// varpi: product over types of (q^{-1} t^a_l - q t^a_{l'})/(t^a_l - t^a_{l'}), l < l'.
Rational varpi(const Composition& c, const VariableAssignment& t, const Rational& q);

/// Twisted symmetrization: sum over the group of inversion_factor * f(permuted t).
/// T needs a zero seed and axpy-style accumulation via `acc`.
template <class T, class Fn>
T q_symmetrize(const Composition& c, const VariableAssignment& t, const Rational& q, Fn&& fn, T zero,
               const std::function<void(T&, const Rational&, const T&)>& acc) {
  T total = std::move(zero);
  for_each_perm(c, [&](const PermTuple& sigma) {
    const Rational factor = inversion_factor(c, t, q, sigma);
    const T val = fn(permuted(t, sigma));
    acc(total, factor, val);
  });
  return total;
}

/// Plain symmetrization: sum of f over permuted variable sets.
template <class T, class Fn>
T symmetrize_plain(const Composition& c, const VariableAssignment& t, Fn&& fn, T zero,
                   const std::function<void(T&, const Rational&, const T&)>& acc) {
  T total = std::move(zero);
  const Rational one(1);
  for_each_perm(c, [&](const PermTuple& sigma) {
    const T val = fn(permuted(t, sigma));
    acc(total, one, val);
  });
  return total;
}

/// Weighted symmetrization Sym(varpi * f); the variant carrying the closed
/// Bethe-vector formulas.
template <class T, class Fn>
T q_symmetrize_tv(const Composition& c, const VariableAssignment& t, const Rational& q, Fn&& fn, T zero,
                  const std::function<void(T&, const Rational&, const T&)>& acc) {
  T total = std::move(zero);
  for_each_perm(c, [&](const PermTuple& sigma) {
    const VariableAssignment ts = permuted(t, sigma);
    const Rational w = varpi(c, ts, q);
    const T val = fn(ts);
    acc(total, w, val);
  });
  return total;
}

/// Scalar helpers for the templates above.
Rational sym_q_scalar(const Composition& c, const VariableAssignment& t, const Rational& q,
                      const std::function<Rational(const VariableAssignment&)>& fn);
Rational sym_plain_scalar(const Composition& c, const VariableAssignment& t,
                          const std::function<Rational(const VariableAssignment&)>& fn);
Rational sym_tv_scalar(const Composition& c, const VariableAssignment& t, const Rational& q,
                       const std::function<Rational(const VariableAssignment&)>& fn);

/// Closed multiplicative coefficient series of the two closed formulas.
Rational coeff_Y(const AdmissibleM& m, const Composition& c, const VariableAssignment& t,
                 const Rational& q);
Rational coeff_X(const AdmissibleS& s, const Composition& c, const VariableAssignment& t,
                 const Rational& q);

/// Draws an assignment with all values distinct and q x - q^{-1} y nonzero
/// for every ordered pair over values ∪ extra; throws ExhaustedError after
/// max_attempts rejections.
VariableAssignment sample_assignment(const Composition& c, const Rational& q,
                                     const std::vector<Rational>& extra, Sampler& sampler,
                                     int max_attempts = 200);

}  // namespace uqgln
