#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "uqgln/errors.hpp"
#include "uqgln/qsym.hpp"

using namespace uqgln;

namespace {

// ---- factor-by-factor oracle for the closed coefficient series ----
// Independent double-loop evaluators of the constituent sub-series; the
// library's closed forms must match their products.

Rational u_series(const std::vector<Rational>& u, const std::vector<Rational>& v, const Rational& q) {
  const Rational qi = q.inverse(), one(1);
  Rational out(1);
  const size_t k = u.size();
  REQUIRE(v.size() == k);
  for (size_t i = 0; i < k; ++i) out *= (v[i] / u[i]) / (one - v[i] / u[i]);
  for (size_t m = 0; m < k; ++m)
    for (size_t n = m + 1; n < k; ++n) out *= (qi - q * (v[m] / u[n])) / (one - v[m] / u[n]);
  return out;
}

Rational v_series(const std::vector<Rational>& u, const std::vector<Rational>& v, const Rational& q) {
  const Rational qi = q.inverse(), one(1);
  Rational out(1);
  const size_t k = u.size();
  REQUIRE(v.size() == k);
  for (size_t i = 0; i < k; ++i) out *= (v[i] / u[i]) / (one - v[i] / u[i]);
  for (size_t n = 0; n < k; ++n)
    for (size_t m = n + 1; m < k; ++m) out *= (q - qi * (v[n] / u[m])) / (one - v[n] / u[m]);
  return out;
}

// Z_{mbar}(t_{(lbar, rbar]}) as a double product over adjacent types.
Rational z_series(const std::vector<int>& mbar, const std::vector<int>& lbar, const std::vector<int>& rbar,
                  const VariableAssignment& t, const Rational& q, int N) {
  const Rational qi = q.inverse(), one(1);
  Rational out(1);
  for (int a = 1; a <= N - 2; ++a) {
    for (int l = lbar[a - 1] + mbar[a - 1] + 1; l <= rbar[a - 1]; ++l)
      for (int lp = lbar[a] + 1; lp <= lbar[a] + mbar[a]; ++lp) {
        const Rational x = t.at(a + 1, lp) / t.at(a, l);
        out *= (qi - q * x) / (one - x);
      }
  }
  return out;
}

// Zhat_{sbar}(t_{(lbar, rbar]}).
Rational zhat_series(const std::vector<int>& sbar, const std::vector<int>& lbar,
                     const std::vector<int>& rbar, const VariableAssignment& t, const Rational& q, int N) {
  const Rational qi = q.inverse(), one(1);
  Rational out(1);
  for (int a = 1; a <= N - 2; ++a) {
    for (int l = rbar[a - 1] - sbar[a - 1] + 1; l <= rbar[a - 1]; ++l)
      for (int lp = lbar[a] + 1; lp <= rbar[a] - sbar[a]; ++lp) {
        const Rational x = t.at(a, l) / t.at(a + 1, lp);
        out *= (q - qi * x) / (one - x);
      }
  }
  return out;
}

// Y(t_{(lbar, lbar+mbar]}) for string type j.
Rational y_series(int j, const std::vector<int>& lbar, const std::vector<int>& mbar,
                  const VariableAssignment& t, const Rational& q, int N) {
  Rational out(1);
  for (int a = j + 1; a <= N - 1; ++a) {
    std::vector<Rational> us, vs;
    for (int k = lbar[a - 2] + mbar[a - 2] - mbar[a - 1] + 1; k <= lbar[a - 2] + mbar[a - 2]; ++k)
      us.push_back(t.at(a - 1, k));
    for (int k = lbar[a - 1] + 1; k <= lbar[a - 1] + mbar[a - 1]; ++k) vs.push_back(t.at(a, k));
    out *= u_series(us, vs, q);
  }
  return out;
}

// X(t_{(rbar-sbar, rbar]}) for string type j.
Rational x_series(int j, const std::vector<int>& rbar, const std::vector<int>& sbar,
                  const VariableAssignment& t, const Rational& q) {
  Rational out(1);
  for (int a = 1; a <= j - 1; ++a) {
    std::vector<Rational> us, vs;
    for (int k = rbar[a] - sbar[a] + sbar[a - 1]; k >= rbar[a] - sbar[a] + 1; --k)
      us.push_back(t.at(a + 1, k));
    for (int k = rbar[a - 1]; k >= rbar[a - 1] - sbar[a - 1] + 1; --k) vs.push_back(t.at(a, k));
    out *= v_series(us, vs, q);
  }
  return out;
}

Rational coeff_y_oracle(const AdmissibleM& m, const Composition& c, const VariableAssignment& t,
                        const Rational& q) {
  const int N = c.N;
  Rational out(1);
  for (int j = 1; j <= N - 3; ++j) {
    std::vector<int> mrow(static_cast<size_t>(N - 1), 0), lbar, rbar;
    for (int a = j; a <= N - 1; ++a) mrow[static_cast<size_t>(a - 1)] = m.at(j, a);
    for (int a = 1; a <= N - 1; ++a) {
      lbar.push_back(prefix_m(m, j - 1, a));
      rbar.push_back(c.count(a));
    }
    out *= z_series(mrow, lbar, rbar, t, q, N);
  }
  for (int j = 1; j <= N - 2; ++j) {
    std::vector<int> mrow(static_cast<size_t>(N - 1), 0), lbar;
    for (int a = j; a <= N - 1; ++a) mrow[static_cast<size_t>(a - 1)] = m.at(j, a);
    for (int a = 1; a <= N - 1; ++a) lbar.push_back(prefix_m(m, j - 1, a));
    out *= y_series(j, lbar, mrow, t, q, N);
  }
  return out;
}

Rational coeff_x_oracle(const AdmissibleS& s, const Composition& c, const VariableAssignment& t,
                        const Rational& q) {
  const int N = c.N;
  Rational out(1);
  for (int j = 3; j <= N - 1; ++j) {
    std::vector<int> srow(static_cast<size_t>(N - 1), 0), lbar, rbar;
    for (int a = 1; a <= j; ++a) srow[static_cast<size_t>(a - 1)] = s.at(j, a);
    for (int a = 1; a <= N - 1; ++a) {
      lbar.push_back(0);
      rbar.push_back(c.count(a) - prefix_s(s, j + 1, a));
    }
    out *= zhat_series(srow, lbar, rbar, t, q, N);
  }
  for (int j = 2; j <= N - 1; ++j) {
    std::vector<int> srow(static_cast<size_t>(N - 1), 0), rbar;
    for (int a = 1; a <= j; ++a) srow[static_cast<size_t>(a - 1)] = s.at(j, a);
    for (int a = 1; a <= N - 1; ++a) rbar.push_back(c.count(a) - prefix_s(s, j + 1, a));
    out *= x_series(j, rbar, srow, t, q);
  }
  return out;
}

VariableAssignment fixed_assignment(const Composition& c, Sampler& s, const Rational& q) {
  return sample_assignment(c, q, {}, s);
}

}  // namespace

TEST_CASE("admissible enumeration: worked examples") {
  {
    const Composition c{2, {1}};
    const auto ss = enumerate_admissible_s(c);
    REQUIRE(ss.size() == 1);
    CHECK(ss[0].at(1, 1) == 1);
    CHECK(enumerate_admissible_m(c).size() == 1);
  }
  {
    const Composition c{3, {1, 1}};
    CHECK(enumerate_admissible_s(c).size() == 2);
    CHECK(enumerate_admissible_m(c).size() == 2);
  }
}

TEST_CASE("admissible enumeration matches bounded grid search") {
  // every composition with |n| <= 4 at N = 3, 4 (the acceptance suite runs
  // the |n| <= 6 grid)
  for (int N : {3, 4}) {
    std::function<void(std::vector<int>&, int)> walk = [&](std::vector<int>& n, int rest) {
      if (static_cast<int>(n.size()) == N - 1) {
        const Composition c{N, n};
        const auto ss = enumerate_admissible_s(c);
        const auto ms = enumerate_admissible_m(c);
        // brute force with per-column caps n_a
        long bs = 0, bm = 0;
        std::vector<int> cells;
        std::function<void(int, int)> rec_s = [&](int b, int a) {
          if (b == N) {
            AdmissibleS cand;
            cand.N = N;
            int k = 0;
            for (int bb = 1; bb <= N - 1; ++bb) {
              cand.rows.push_back({});
              for (int aa = 1; aa <= bb; ++aa) cand.rows.back().push_back(cells[static_cast<size_t>(k++)]);
            }
            bool ok = true;
            for (int bb = 1; bb <= N - 1 && ok; ++bb)
              for (int aa = 1; aa <= bb && ok; ++aa)
                if (cand.at(bb, aa) < cand.at(bb, aa - 1)) ok = false;
            for (int aa = 1; aa <= N - 1 && ok; ++aa) {
              int sum = 0;
              for (int bb = aa; bb <= N - 1; ++bb) sum += cand.at(bb, aa);
              if (sum != c.count(aa)) ok = false;
            }
            if (ok) ++bs;
            return;
          }
          if (a > b) {
            rec_s(b + 1, 1);
            return;
          }
          for (int v = 0; v <= c.count(a); ++v) {
            cells.push_back(v);
            rec_s(b, a + 1);
            cells.pop_back();
          }
        };
        rec_s(1, 1);
        std::function<void(int, int)> rec_m = [&](int b, int a) {
          if (b == N) {
            AdmissibleM cand;
            cand.N = N;
            int k = 0;
            for (int bb = 1; bb <= N - 1; ++bb) {
              cand.rows.push_back({});
              for (int aa = bb; aa <= N - 1; ++aa) cand.rows.back().push_back(cells[static_cast<size_t>(k++)]);
            }
            bool ok = true;
            for (int bb = 1; bb <= N - 1 && ok; ++bb)
              for (int aa = bb; aa <= N - 1 && ok; ++aa)
                if (cand.at(bb, aa) < cand.at(bb, aa + 1)) ok = false;
            for (int aa = 1; aa <= N - 1 && ok; ++aa) {
              int sum = 0;
              for (int bb = 1; bb <= aa; ++bb) sum += cand.at(bb, aa);
              if (sum != c.count(aa)) ok = false;
            }
            if (ok) ++bm;
            return;
          }
          if (a > N - 1) {
            rec_m(b + 1, b + 1);
            return;
          }
          for (int v = 0; v <= c.count(a); ++v) {
            cells.push_back(v);
            rec_m(b, a + 1);
            cells.pop_back();
          }
        };
        rec_m(1, 1);
        CHECK(static_cast<long>(ss.size()) == bs);
        CHECK(static_cast<long>(ms.size()) == bm);
        return;
      }
      for (int k = 0; k <= rest; ++k) {
        n.push_back(k);
        walk(n, rest - k);
        n.pop_back();
      }
    };
    std::vector<int> n;
    walk(n, 4);
  }
}

TEST_CASE("prefix sums and boundary conventions") {
  const Composition c{3, {1, 1}};
  const auto ms = enumerate_admissible_m(c);
  const auto ss = enumerate_admissible_s(c);
  for (const auto& m : ms) {
    CHECK(prefix_m(m, 0, 1) == 0);
    // bold m^{N-1} = n
    CHECK(prefix_m(m, 2, 1) == 1);
    CHECK(prefix_m(m, 2, 2) == 1);
  }
  for (const auto& s : ss) {
    // bold s^1 = n
    CHECK(prefix_s(s, 1, 1) == 1);
    CHECK(prefix_s(s, 1, 2) == 1);
    CHECK(prefix_s(s, 3, 1) == 0);
    // s-tilde with b = a is the empty sum
    CHECK(stilde(s, 1, 1) == 0);
    CHECK(stilde(s, 2, 2) == 0);
  }
  // N=3, n=(1,1), matrix with m^1_2 = 1: bold m^1 = (1,1)
  for (const auto& m : ms)
    if (m.at(1, 2) == 1) {
      CHECK(prefix_m(m, 1, 1) == 1);
      CHECK(prefix_m(m, 1, 2) == 1);
    }
}

TEST_CASE("q-integers") {
  const Rational q(2);
  CHECK(qint_factorial(0, q) == Rational(1));
  CHECK(qint_factorial(1, q) == Rational(1));
  CHECK(qint(2, Rational(3, 2)) == Rational(3, 2) + Rational(2, 3));
  CHECK(qint_factorial(3, q) == Rational(105, 8));  // (q^2+1+q^{-2})(q+q^{-1}) at q=2
}

TEST_CASE("q-symmetrization: single permutation and the two-variable expansion") {
  Sampler smp(61);
  const Rational q = smp.generic_q();
  {
    const Composition c{2, {1}};
    const VariableAssignment t = fixed_assignment(c, smp, q);
    auto f = [](const VariableAssignment& tt) { return tt.at(1, 1); };
    CHECK(sym_q_scalar(c, t, q, f) == t.at(1, 1));
  }
  {
    const Composition c{2, {2}};
    const VariableAssignment t = fixed_assignment(c, smp, q);
    auto f = [](const VariableAssignment& tt) { return tt.at(1, 1); };
    const Rational t1 = t.at(1, 1), t2 = t.at(1, 2);
    const Rational want =
        t1 + ((q * t1 - q.inverse() * t2) / (q.inverse() * t1 - q * t2)) * t2;
    CHECK(sym_q_scalar(c, t, q, f) == want);
  }
}

TEST_CASE("q-symmetrization output is invariant under the twisted action") {
  Sampler smp(67);
  const Rational q = smp.generic_q();
  const Composition c{2, {3}};
  const VariableAssignment t = fixed_assignment(c, smp, q);
  auto f = [](const VariableAssignment& tt) {
    return tt.at(1, 1) * tt.at(1, 1) + tt.at(1, 2) * tt.at(1, 3).inverse();
  };
  auto h = [&](const VariableAssignment& tt) { return sym_q_scalar(c, tt, q, f); };
  // pi(sigma_{i,i+1}) H at t: factor * H(swapped), must reproduce H(t).
  for (int i = 1; i <= 2; ++i) {
    VariableAssignment swapped = t;
    std::swap(swapped.t[0][static_cast<size_t>(i - 1)], swapped.t[0][static_cast<size_t>(i)]);
    const Rational factor = (q * t.at(1, i) - q.inverse() * t.at(1, i + 1)) /
                            (q.inverse() * t.at(1, i) - q * t.at(1, i + 1));
    CHECK(factor * h(swapped) == h(t));
  }
}

TEST_CASE("coefficient series: empty and one-factor cases") {
  Sampler smp(71);
  {
    const Composition c{2, {2}};
    const Rational q = smp.generic_q();
    const VariableAssignment t = fixed_assignment(c, smp, q);
    for (const auto& m : enumerate_admissible_m(c)) CHECK(coeff_Y(m, c, t, q) == Rational(1));
    for (const auto& s : enumerate_admissible_s(c)) CHECK(coeff_X(s, c, t, q) == Rational(1));
  }
  {
    const Composition c{3, {1, 1}};
    const Rational q = smp.generic_q();
    const VariableAssignment t = fixed_assignment(c, smp, q);
    for (const auto& m : enumerate_admissible_m(c)) {
      if (m.at(1, 2) != 1) continue;
      const Rational x = t.at(2, 1) / t.at(1, 1);
      CHECK(coeff_Y(m, c, t, q) == x / (Rational(1) - x));
    }
  }
}

TEST_CASE("closed coefficient series match the factor-by-factor oracle") {
  Sampler smp(73);
  for (const Composition& c :
       {Composition{3, {1, 1}}, Composition{3, {2, 1}}, Composition{4, {1, 1, 1}},
        Composition{4, {2, 1, 1}}}) {
    const Rational q = smp.generic_q();
    const VariableAssignment t = fixed_assignment(c, smp, q);
    for (const auto& m : enumerate_admissible_m(c)) {
      INFO("matrix ", m.str());
      CHECK(coeff_Y(m, c, t, q) == coeff_y_oracle(m, c, t, q));
    }
    for (const auto& s : enumerate_admissible_s(c)) {
      INFO("matrix ", s.str());
      CHECK(coeff_X(s, c, t, q) == coeff_x_oracle(s, c, t, q));
    }
  }
}

TEST_CASE("an exhausted sampling budget is reported distinctly") {
  Sampler smp(113);
  const Composition c{2, {2}};
  CHECK_THROWS_AS(sample_assignment(c, Rational(3, 2), {}, smp, 0), ExhaustedError);
}

TEST_CASE("assignment sampling guards against q-shifted pairs") {
  Sampler smp(79);
  const Composition c{3, {2, 2}};
  const Rational q = smp.generic_q();
  const Rational extra = smp.positive_rational();
  const VariableAssignment t = sample_assignment(c, q, {extra}, smp);
  std::vector<Rational> all = t.values();
  all.push_back(extra);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      CHECK(all[i] != all[j]);
      CHECK_FALSE((q * all[i] - q.inverse() * all[j]).is_zero());
    }
}
