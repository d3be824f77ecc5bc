#include "uqgln/qsym.hpp"

#include <algorithm>
#include <numeric>

#include "uqgln/errors.hpp"
#include "uqgln/util.hpp"

namespace uqgln {

int Composition::total() const { return std::accumulate(n.begin(), n.end(), 0); }

std::vector<Rational> VariableAssignment::values() const {
  std::vector<Rational> out;
  for (const auto& group : t)
    for (const auto& x : group) out.push_back(x);
  return out;
}

VariableAssignment permuted(const VariableAssignment& t, const PermTuple& sigma) {
  VariableAssignment out;
  out.t.resize(t.t.size());
  for (size_t a = 0; a < t.t.size(); ++a) {
    out.t[a].reserve(t.t[a].size());
    for (size_t l = 0; l < t.t[a].size(); ++l) out.t[a].push_back(t.t[a][static_cast<size_t>(sigma[a][l])]);
  }
  return out;
}

void for_each_perm(const Composition& c, const std::function<void(const PermTuple&)>& fn) {
  PermTuple sigma(static_cast<size_t>(c.N - 1));
  for (int a = 0; a < c.N - 1; ++a) {
    sigma[static_cast<size_t>(a)].resize(static_cast<size_t>(c.n[static_cast<size_t>(a)]));
    std::iota(sigma[static_cast<size_t>(a)].begin(), sigma[static_cast<size_t>(a)].end(), 0);
  }
  std::function<void(int)> rec = [&](int a) {
    if (a == c.N - 1) {
      fn(sigma);
      return;
    }
    auto& p = sigma[static_cast<size_t>(a)];
    std::sort(p.begin(), p.end());
    do {
      rec(a + 1);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(p.begin(), p.end());
  };
  rec(0);
}

std::string AdmissibleS::str() const {
  std::string out = "s[";
  for (size_t b = 0; b < rows.size(); ++b) {
    if (b) out += ";";
    for (size_t a = 0; a < rows[b].size(); ++a) {
      if (a) out += ",";
      out += std::to_string(rows[b][a]);
    }
  }
  return out + "]";
}

std::string AdmissibleM::str() const {
  std::string out = "m[";
  for (size_t b = 0; b < rows.size(); ++b) {
    if (b) out += ";";
    for (size_t a = 0; a < rows[b].size(); ++a) {
      if (a) out += ",";
      out += std::to_string(rows[b][a]);
    }
  }
  return out + "]";
}

std::vector<AdmissibleS> enumerate_admissible_s(const Composition& c) {
  const int N = c.N;
  std::vector<AdmissibleS> out;
  AdmissibleS cur;
  cur.N = N;
  cur.rows.assign(static_cast<size_t>(N - 1), {});
  std::vector<int> colsum(static_cast<size_t>(N), 0);  // per column a = 1..N-1

  // Rows b = 1..N-1; row b has entries for a = 1..b, weakly increasing.
  std::function<void(int, int, int)> rec = [&](int b, int a, int prev) {
    if (b == N) {
      bool ok = true;
      for (int col = 1; col <= N - 1; ++col)
        if (colsum[static_cast<size_t>(col)] != c.count(col)) ok = false;
      if (ok) out.push_back(cur);
      return;
    }
    if (a > b) {
      rec(b + 1, 1, 0);
      return;
    }
    for (int v = prev; v + colsum[static_cast<size_t>(a)] <= c.count(a); ++v) {
      cur.rows[static_cast<size_t>(b - 1)].push_back(v);
      colsum[static_cast<size_t>(a)] += v;
      rec(b, a + 1, v);
      colsum[static_cast<size_t>(a)] -= v;
      cur.rows[static_cast<size_t>(b - 1)].pop_back();
    }
  };
  rec(1, 1, 0);
  return out;
}

std::vector<AdmissibleM> enumerate_admissible_m(const Composition& c) {
  const int N = c.N;
  std::vector<AdmissibleM> out;
  AdmissibleM cur;
  cur.N = N;
  cur.rows.assign(static_cast<size_t>(N - 1), {});
  std::vector<int> colsum(static_cast<size_t>(N), 0);

  // Rows b = 1..N-1; row b has entries for a = b..N-1, weakly decreasing.
  std::function<void(int, int, int)> rec = [&](int b, int a, int prev) {
    if (b == N) {
      bool ok = true;
      for (int col = 1; col <= N - 1; ++col)
        if (colsum[static_cast<size_t>(col)] != c.count(col)) ok = false;
      if (ok) out.push_back(cur);
      return;
    }
    if (a > N - 1) {
      rec(b + 1, b + 1, c.count(b + 1 <= N - 1 ? b + 1 : N - 1));
      return;
    }
    const int hi = std::min(prev, c.count(a) - colsum[static_cast<size_t>(a)]);
    for (int v = hi; v >= 0; --v) {
      cur.rows[static_cast<size_t>(b - 1)].push_back(v);
      colsum[static_cast<size_t>(a)] += v;
      rec(b, a + 1, v);
      colsum[static_cast<size_t>(a)] -= v;
      cur.rows[static_cast<size_t>(b - 1)].pop_back();
    }
  };
  rec(1, 1, c.count(1));
  return out;
}

int prefix_m(const AdmissibleM& m, int b, int a) {
  int total = 0;
  for (int cidx = 1; cidx <= b && cidx <= a; ++cidx) total += m.at(cidx, a);
  return total;
}

int prefix_s(const AdmissibleS& s, int j, int a) {
  int total = 0;
  for (int cidx = std::max(j, a); cidx <= s.N - 1; ++cidx) total += s.at(cidx, a);
  return total;
}

int stilde(const AdmissibleS& s, int b, int a) {
  int total = 0;
  for (int cidx = a; cidx <= b - 1; ++cidx) total += s.at(cidx, a);
  return total;
}

Rational qint(int n, const Rational& q) {
  const Rational num = q.pow(n) - q.pow(-n);
  const Rational den = q - q.inverse();
  return num / den;
}

Rational qint_factorial(int n, const Rational& q) {
  Rational out(1);
  for (int k = 2; k <= n; ++k) out *= qint(k, q);
  return out;
}

Rational inversion_factor(const Composition& c, const VariableAssignment& t, const Rational& q,
                          const PermTuple& sigma) {
  const Rational qi = q.inverse();
  Rational out(1);
  for (int a = 1; a <= c.N - 1; ++a) {
    const int n = c.count(a);
    const auto& p = sigma[static_cast<size_t>(a - 1)];
    for (int l = 0; l < n; ++l)
      for (int lp = l + 1; lp < n; ++lp) {
        if (p[static_cast<size_t>(l)] <= p[static_cast<size_t>(lp)]) continue;
        const Rational& tl = t.at(a, p[static_cast<size_t>(l)] + 1);
        const Rational& tlp = t.at(a, p[static_cast<size_t>(lp)] + 1);
        const Rational den = qi * tlp - q * tl;
        if (den.is_zero()) throw ResampleError("inversion factor pole");
        out *= (q * tlp - qi * tl) / den;
      }
  }
  return out;
}

Rational varpi(const Composition& c, const VariableAssignment& t, const Rational& q) {
  const Rational qi = q.inverse();
  Rational out(1);
  for (int a = 1; a <= c.N - 1; ++a) {
    const int n = c.count(a);
    for (int l = 1; l <= n; ++l)
      for (int lp = l + 1; lp <= n; ++lp) {
        const Rational den = t.at(a, l) - t.at(a, lp);
        if (den.is_zero()) throw ResampleError("coinciding variables in varpi");
        out *= (qi * t.at(a, l) - q * t.at(a, lp)) / den;
      }
  }
  return out;
}

namespace {
const std::function<void(Rational&, const Rational&, const Rational&)> kScalarAcc =
    [](Rational& acc, const Rational& cft, const Rational& val) { acc += cft * val; };
}

Rational sym_q_scalar(const Composition& c, const VariableAssignment& t, const Rational& q,
                      const std::function<Rational(const VariableAssignment&)>& fn) {
  return q_symmetrize<Rational>(c, t, q, fn, Rational(0), kScalarAcc);
}

Rational sym_plain_scalar(const Composition& c, const VariableAssignment& t,
                          const std::function<Rational(const VariableAssignment&)>& fn) {
  return symmetrize_plain<Rational>(c, t, fn, Rational(0), kScalarAcc);
}

Rational sym_tv_scalar(const Composition& c, const VariableAssignment& t, const Rational& q,
                       const std::function<Rational(const VariableAssignment&)>& fn) {
  return q_symmetrize_tv<Rational>(c, t, q, fn, Rational(0), kScalarAcc);
}

Rational coeff_Y(const AdmissibleM& m, const Composition& c, const VariableAssignment& t,
                 const Rational& q) {
  const Rational qi = q.inverse();
  const Rational one(1);
  Rational out(1);
  for (int a = 2; a <= c.N - 1; ++a)
    for (int b = 1; b <= a - 1; ++b) {
      const int mba = prefix_m(m, b, a);
      const int mba1 = prefix_m(m, b, a - 1);
      for (int l = 0; l <= m.at(b, a) - 1; ++l) {
        const Rational x = t.at(a, mba - l) / t.at(a - 1, mba1 - l);
        if ((one - x).is_zero()) throw ResampleError("coeff_Y pole");
        out *= x / (one - x);
        for (int lp = mba1 - l + 1; lp <= c.count(a - 1); ++lp) {
          const Rational y = t.at(a, mba - l) / t.at(a - 1, lp);
          if ((one - y).is_zero()) throw ResampleError("coeff_Y pole");
          out *= (qi - q * y) / (one - y);
        }
      }
    }
  return out;
}

Rational coeff_X(const AdmissibleS& s, const Composition& c, const VariableAssignment& t,
                 const Rational& q) {
  const Rational qi = q.inverse();
  const Rational one(1);
  Rational out(1);
  for (int b = 2; b <= c.N - 1; ++b)
    for (int a = 1; a <= b - 1; ++a) {
      const int sta = stilde(s, b, a);
      const int sta1 = stilde(s, b, a + 1);
      for (int l = 1; l <= s.at(b, a); ++l) {
        const Rational x = t.at(a, l + sta) / t.at(a + 1, l + sta1);
        if ((one - x).is_zero()) throw ResampleError("coeff_X pole");
        out *= x / (one - x);
        for (int lp = 1; lp <= l + sta1 - 1; ++lp) {
          const Rational y = t.at(a, l + sta) / t.at(a + 1, lp);
          if ((one - y).is_zero()) throw ResampleError("coeff_X pole");
          out *= (q - qi * y) / (one - y);
        }
      }
    }
  return out;
}

VariableAssignment sample_assignment(const Composition& c, const Rational& q,
                                     const std::vector<Rational>& extra, Sampler& sampler,
                                     int max_attempts) {
  const Rational qi = q.inverse();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    VariableAssignment t;
    t.t.resize(static_cast<size_t>(c.N - 1));
    for (int a = 0; a < c.N - 1; ++a) {
      t.t[static_cast<size_t>(a)].clear();
      for (int l = 0; l < c.n[static_cast<size_t>(a)]; ++l)
        t.t[static_cast<size_t>(a)].push_back(sampler.positive_rational());
    }
    std::vector<Rational> all = t.values();
    for (const auto& e : extra) all.push_back(e);
    bool ok = true;
    for (size_t i = 0; i < all.size() && ok; ++i)
      for (size_t j = 0; j < all.size() && ok; ++j) {
        if (i == j) continue;
        if (all[i] == all[j]) ok = false;
        if ((q * all[i] - qi * all[j]).is_zero()) ok = false;
      }
    if (ok) return t;
    log_note("resample: assignment hit a coincidence or q-shifted pair (attempt " +
             std::to_string(attempt + 1) + ")");
  }
  throw ExhaustedError("unlucky sampling: could not draw a pole-free variable assignment");
}

}  // namespace uqgln
