#include "uqgln/rmatrix.hpp"

#include "uqgln/errors.hpp"

namespace uqgln {

namespace {

long ipow(int base, int exp) {
  long r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

int digit_of(long index, int pos, int M, int N) {
  // pos is 0-based with leg 1 (pos 0) the slowest index.
  long d = index;
  for (int k = M - 1; k > pos; --k) d /= N;
  return static_cast<int>(d % N);
}

long with_digit(long index, int pos, int M, int N, int value) {
  const long stride = ipow(N, M - 1 - pos);
  const int old = digit_of(index, pos, M, N);
  return index + (static_cast<long>(value) - old) * stride;
}

}  // namespace

RPoint::RPoint(int N_, Rational u_, Rational v_, Rational q_)
    : N(N_), u(std::move(u_)), v(std::move(v_)), q(std::move(q_)) {
  if (N < 2) throw DimensionError("R-matrix needs N >= 2");
  if (q.is_zero()) throw ResampleError("R-matrix requires q != 0");
  if ((q * u - q.inverse() * v).is_zero()) throw ResampleError("R-matrix pole qu - q^{-1}v = 0");
}

RCoefficients r_coefficients(const Rational& u, const Rational& v, const Rational& q) {
  const Rational qinv = q.inverse();
  const Rational den = q * u - qinv * v;
  if (den.is_zero()) throw ResampleError("R-matrix pole qu - q^{-1}v = 0");
  RCoefficients c;
  c.mid = (u - v) / den;
  const Rational e = (q - qinv) / den;
  c.exch_u = u * e;
  c.exch_v = v * e;
  return c;
}

OpMatrix build_r(const RPoint& p) { return r_on_legs(p.N, 2, 1, 2, p.u, p.v, p.q); }

OpMatrix build_r_corrupted(const RPoint& p) { return r_on_legs(p.N, 2, 1, 2, p.u, p.v, p.q, true); }

OpMatrix r_on_legs(int N, int M, int leg_j, int leg_i, const Rational& u, const Rational& v,
                   const Rational& q, bool corrupt) {
  if (leg_j == leg_i || leg_j < 1 || leg_i < 1 || leg_j > M || leg_i > M)
    throw DimensionError("r_on_legs: bad legs");
  RCoefficients c = r_coefficients(u, v, q);
  if (corrupt) c.exch_u += Rational(1);
  const long dim = ipow(N, M);
  OpMatrix out(static_cast<int>(dim), static_cast<int>(dim));
  const int pj = leg_j - 1;
  const int pi = leg_i - 1;
  for (long col = 0; col < dim; ++col) {
    const int a = digit_of(col, pj, M, N);  // slot 1 of R (carries u)
    const int b = digit_of(col, pi, M, N);
    if (a == b) {
      out.at(static_cast<int>(col), static_cast<int>(col)) = Rational(1);
      continue;
    }
    out.at(static_cast<int>(col), static_cast<int>(col)) = c.mid;
    const long swapped = with_digit(with_digit(col, pj, M, N, b), pi, M, N, a);
    out.at(static_cast<int>(swapped), static_cast<int>(col)) = a > b ? c.exch_u : c.exch_v;
  }
  return out;
}

void apply_r_legs(std::vector<Rational>& state, int N, int M, int dim, int leg_j, int leg_i,
                  const Rational& u, const Rational& v, const Rational& q) {
  const RCoefficients c = r_coefficients(u, v, q);
  const long aux = ipow(N, M);
  const int pj = leg_j - 1;
  const int pi = leg_i - 1;
  std::vector<Rational> out(state.size());
  for (long col = 0; col < aux; ++col) {
    const long base = col * dim;
    bool empty = true;
    for (int m = 0; m < dim; ++m)
      if (!state[static_cast<size_t>(base + m)].is_zero()) {
        empty = false;
        break;
      }
    if (empty) continue;
    const int a = digit_of(col, pj, M, N);
    const int b = digit_of(col, pi, M, N);
    if (a == b) {
      for (int m = 0; m < dim; ++m) out[static_cast<size_t>(base + m)] += state[static_cast<size_t>(base + m)];
      continue;
    }
    const long swapped = (with_digit(with_digit(col, pj, M, N, b), pi, M, N, a)) * dim;
    const Rational& ex = a > b ? c.exch_u : c.exch_v;
    for (int m = 0; m < dim; ++m) {
      const Rational& x = state[static_cast<size_t>(base + m)];
      if (x.is_zero()) continue;
      out[static_cast<size_t>(base + m)] += c.mid * x;
      out[static_cast<size_t>(swapped + m)] += ex * x;
    }
  }
  state = std::move(out);
}

YbeResult check_ybe(int N, const Rational& q, const Rational& u, const Rational& v, const Rational& w,
                    bool corrupt) {
  // Both sides applied to every basis vector of C^N ⊗ C^N ⊗ C^N.
  const long dim = ipow(N, 3);
  const OpMatrix r12 = r_on_legs(N, 3, 1, 2, u, v, q, corrupt);
  const OpMatrix r13 = r_on_legs(N, 3, 1, 3, u, w, q, corrupt);
  const OpMatrix r23 = r_on_legs(N, 3, 2, 3, v, w, q, corrupt);
  for (long col = 0; col < dim; ++col) {
    std::vector<Rational> e(static_cast<size_t>(dim));
    e[static_cast<size_t>(col)] = Rational(1);
    const auto lhs = r12.apply(r13.apply(r23.apply(e)));
    const auto rhs = r23.apply(r13.apply(r12.apply(e)));
    for (long row = 0; row < dim; ++row) {
      if (lhs[static_cast<size_t>(row)] != rhs[static_cast<size_t>(row)]) {
        YbeResult res;
        res.ok = false;
        res.detail = "first mismatch at entry (" + std::to_string(row) + "," + std::to_string(col) +
                     "): lhs=" + lhs[static_cast<size_t>(row)].str() +
                     " rhs=" + rhs[static_cast<size_t>(row)].str();
        return res;
      }
    }
  }
  return {};
}

std::vector<std::pair<int, int>> r_product_pair_order(int M) {
  std::vector<std::pair<int, int>> order;
  for (int j = M; j > 1; --j)
    for (int i = j - 1; i >= 1; --i) order.emplace_back(j, i);
  return order;
}

OpMatrix build_r_product(int N, const Rational& q, const std::vector<Rational>& us) {
  const int M = static_cast<int>(us.size());
  const long dim = ipow(N, M);
  OpMatrix acc = OpMatrix::identity(static_cast<int>(dim));
  const auto order = r_product_pair_order(M);
  // Rightmost factor first.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [j, i] = *it;
    acc = r_on_legs(N, M, j, i, us[static_cast<size_t>(j - 1)], us[static_cast<size_t>(i - 1)], q) * acc;
  }
  return acc;
}

}  // namespace uqgln
