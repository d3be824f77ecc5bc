#include "uqgln/bethe.hpp"

#include <algorithm>

#include "uqgln/errors.hpp"
#include "uqgln/rmatrix.hpp"
#include "uqgln/util.hpp"

namespace uqgln {

const char* route_name(Route r) {
  switch (r) {
    case Route::trace: return "trace";
    case Route::tv_x: return "tv_x";
    case Route::tv_y: return "tv_y";
    case Route::w: return "w";
    case Route::w_hat: return "w_hat";
  }
  return "?";
}

std::optional<Route> route_from_name(const std::string& name) {
  for (Route r : {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat})
    if (name == route_name(r)) return r;
  return std::nullopt;
}

namespace {

long ipow(int base, int exp) {
  long r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

int digit_of(long index, int pos, int M, int N) {
  long d = index;
  for (int k = M - 1; k > pos; --k) d /= N;
  return static_cast<int>(d % N);
}

std::vector<Rational> flatten_variables(const Composition& c, const VariableAssignment& t) {
  std::vector<Rational> us;
  for (int a = 1; a <= c.N - 1; ++a)
    for (int l = 1; l <= c.count(a); ++l) us.push_back(t.at(a, l));
  return us;
}

std::vector<int> leg_types(const Composition& c) {
  std::vector<int> types;
  for (int a = 1; a <= c.N - 1; ++a)
    for (int l = 0; l < c.count(a); ++l) types.push_back(a);
  return types;
}

// L^{(k)}(u) on a state over (C^N)^{⊗M} ⊗ V, matrix leg at 0-based pos.
void apply_leg_l(std::vector<Rational>& state, int N, int M, int dim, int pos, const BlockGrid& grid) {
  const long aux = ipow(N, M);
  const long stride = ipow(N, M - 1 - pos);
  std::vector<Rational> out(state.size());
  for (long alpha = 0; alpha < aux; ++alpha) {
    const long base = alpha * dim;
    bool empty = true;
    for (int m = 0; m < dim; ++m)
      if (!state[static_cast<size_t>(base + m)].is_zero()) {
        empty = false;
        break;
      }
    if (empty) continue;
    const int a = digit_of(alpha, pos, M, N);
    for (int i = 0; i < N; ++i) {
      const OpMatrix& blk = grid.at(i, a);
      if (blk.is_zero()) continue;
      const long target = (alpha + (static_cast<long>(i) - a) * stride) * dim;
      for (int r = 0; r < dim; ++r) {
        Rational acc;
        for (int m = 0; m < dim; ++m) {
          const Rational& x = state[static_cast<size_t>(base + m)];
          if (x.is_zero() || blk.at(r, m).is_zero()) continue;
          acc += blk.at(r, m) * x;
        }
        if (!acc.is_zero()) out[static_cast<size_t>(target + r)] += acc;
      }
    }
  }
  state = std::move(out);
}

std::string vec_str(const std::vector<Rational>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

const std::function<void(std::vector<Rational>&, const Rational&, const std::vector<Rational>&)>
    kVecAcc = [](std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& x) {
      axpy(acc, c, x);
    };

const Rational& require_z(const BetheTask& task, const char* route) {
  if (!task.module.z)
    throw ConfigError(std::string(route) + " is defined on single evaluation modules only");
  return *task.module.z;
}

}  // namespace

std::string BetheTask::fingerprint() const {
  std::string s = "N=" + std::to_string(comp.N) + ";n=";
  for (int x : comp.n) s += std::to_string(x) + ",";
  s += ";q=" + q.str() + ";z=";
  for (const auto& z : module.factor_zs) s += z.str() + ",";
  s += ";t=";
  for (const auto& group : t.t)
    for (const auto& x : group) s += x.str() + ",";
  return hex16(fnv1a64(s));
}

BetheVector bethe_trace(const BetheTask& task) {
  const Composition& c = task.comp;
  const int N = c.N;
  const int M = c.total();
  const int dim = task.module.rep.dim;
  BetheVector out;
  out.route = Route::trace;
  out.fingerprint = task.fingerprint();
  if (M == 0) {
    out.coords = task.module.rep.singular;
    return out;
  }
  const long cells = ipow(N, M) * dim;
  if (cells > task.max_cells)
    throw ConfigError("trace construction needs N^M*dim(V) = " + std::to_string(cells) +
                      " cells, above the cap " + std::to_string(task.max_cells) +
                      "; raise --max-cells to proceed");
  const std::vector<Rational> us = flatten_variables(c, task.t);
  const std::vector<int> types = leg_types(c);
  const Rational& q = task.q;
  const Rational qi = q.inverse();

  // E_{a+1,a} on a type-a leg sends e_a to e_{a+1}: exactly one auxiliary
  // basis column survives the contraction, and one row is read off.
  long beta = 0, alpha = 0;
  for (int k = 0; k < M; ++k) {
    beta = beta * N + types[static_cast<size_t>(k)];           // e_{a+1}
    alpha = alpha * N + (types[static_cast<size_t>(k)] - 1);   // e_a
  }
  std::vector<Rational> state(static_cast<size_t>(cells));
  for (int m = 0; m < dim; ++m)
    state[static_cast<size_t>(beta * dim + m)] = task.module.rep.singular[static_cast<size_t>(m)];

  const auto order = r_product_pair_order(M);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    apply_r_legs(state, N, M, dim, it->first, it->second, us[static_cast<size_t>(it->first - 1)],
                 us[static_cast<size_t>(it->second - 1)], q);
  for (int k = M; k >= 1; --k)
    apply_leg_l(state, N, M, dim, k - 1, task.module.lplus.eval_grid(us[static_cast<size_t>(k - 1)]));

  out.coords.assign(state.begin() + alpha * dim, state.begin() + (alpha + 1) * dim);

  Rational pref(1);
  for (int a = 1; a <= N - 1; ++a)
    for (int b = a + 1; b <= N - 1; ++b)
      for (int j = 1; j <= c.count(b); ++j)
        for (int i = 1; i <= c.count(a); ++i) {
          const Rational den = task.t.at(b, j) - task.t.at(a, i);
          if (den.is_zero()) throw ResampleError("coinciding variables in the trace prefactor");
          pref *= (q * task.t.at(b, j) - qi * task.t.at(a, i)) / den;
        }
  for (auto& x : out.coords) x *= pref;
  return out;
}

BetheVector bethe_tv_x(const BetheTask& task) { return bethe_tv_x_detail(task, nullptr); }

BetheVector bethe_tv_x_detail(const BetheTask& task, std::vector<std::string>* breakdown) {
  const Rational& z = require_z(task, "tv_x");
  const Composition& c = task.comp;
  const ModuleRep& rep = task.module.rep;
  const int N = c.N;
  const Rational& q = task.q;
  const Rational qi = q.inverse();
  std::vector<Rational> total(static_cast<size_t>(rep.dim));
  // checked generators E_{b+1,a}E_{b+1,b+1}, built once per task
  std::vector<std::vector<OpMatrix>> echeck(static_cast<size_t>(N));
  for (int b = 1; b <= N - 1; ++b) {
    echeck[static_cast<size_t>(b)].reserve(static_cast<size_t>(b));
    for (int a = 1; a <= b; ++a)
      echeck[static_cast<size_t>(b)].push_back(composed_lowering(rep, b + 1, a) * rep.cartan(b + 1));
  }
  for (const AdmissibleS& s : enumerate_admissible_s(c)) {
    std::vector<Rational> vec = rep.singular;
    Rational pref(1);
    // Factors ordered as the ordered R-product; rightmost applies first.
    for (int b = 1; b <= N - 1; ++b)
      for (int a = 1; a <= b; ++a) {
        const int k = s.at(b, a) - s.at(b, a - 1);
        if (k == 0) continue;
        const long e = static_cast<long>(s.at(b, a - 1)) * (s.at(b, a - 1) - s.at(b, a));
        pref *= q.pow(e) / qint_factorial(k, q);
        const OpMatrix& gen = echeck[static_cast<size_t>(b)][static_cast<size_t>(a - 1)];
        for (int rpt = 0; rpt < k; ++rpt) vec = gen.apply(vec);
      }
    auto cf = [&](const VariableAssignment& tt) {
      Rational outc(1);
      for (int b = 2; b <= N - 1; ++b)
        for (int a = 1; a <= b - 1; ++a) {
          const int sta = stilde(s, b, a);
          const int sta1 = stilde(s, b, a + 1);
          const long lam = rep.weights[static_cast<size_t>(a)];  // Lambda_{a+1}
          for (int l = 1; l <= s.at(b, a); ++l) {
            const Rational& ta = tt.at(a, l + sta);
            const Rational den = tt.at(a + 1, l + sta1) - ta;
            if (den.is_zero()) throw ResampleError("tv_x coefficient pole");
            outc *= (q.pow(lam) * ta - q.pow(-lam) * z) / den;
            for (int lp = 1; lp <= l + sta1 - 1; ++lp) {
              const Rational den2 = tt.at(a + 1, lp) - ta;
              if (den2.is_zero()) throw ResampleError("tv_x coefficient pole");
              outc *= (q * tt.at(a + 1, lp) - qi * ta) / den2;
            }
          }
        }
      return outc;
    };
    const Rational symc = sym_tv_scalar(c, task.t, q, cf);
    if (breakdown)
      breakdown->push_back("tv_x " + s.str() + ": scalar=" + (pref * symc).str() +
                           " opvec=" + vec_str(vec));
    axpy(total, pref * symc, vec);
  }
  const Rational overall = (q - qi).pow(c.total());
  for (auto& x : total) x *= overall;
  BetheVector out;
  out.route = Route::tv_x;
  out.coords = std::move(total);
  out.fingerprint = task.fingerprint();
  return out;
}

BetheVector bethe_tv_y(const BetheTask& task) { return bethe_tv_y_detail(task, nullptr); }

BetheVector bethe_tv_y_detail(const BetheTask& task, std::vector<std::string>* breakdown) {
  const Rational& z = require_z(task, "tv_y");
  const Composition& c = task.comp;
  const ModuleRep& rep = task.module.rep;
  const int N = c.N;
  const Rational& q = task.q;
  const Rational qi = q.inverse();
  std::vector<Rational> total(static_cast<size_t>(rep.dim));
  // checked generators E_{a+1,b}E_{a+1,a+1}, built once per task
  std::vector<std::vector<OpMatrix>> echeck(static_cast<size_t>(N));
  for (int b = 1; b <= N - 1; ++b) {
    echeck[static_cast<size_t>(b)].reserve(static_cast<size_t>(N - b));
    for (int a = b; a <= N - 1; ++a)
      echeck[static_cast<size_t>(b)].push_back(composed_lowering(rep, a + 1, b) * rep.cartan(a + 1));
  }
  for (const AdmissibleM& m : enumerate_admissible_m(c)) {
    std::vector<Rational> vec = rep.singular;
    Rational pref(1);
    // Factors ordered inversely to the ordered R-product; rightmost first.
    for (int b = N - 1; b >= 1; --b)
      for (int a = N - 1; a >= b; --a) {
        const int k = m.at(b, a) - m.at(b, a + 1);
        if (k == 0) continue;
        const long e = static_cast<long>(m.at(b, a + 1)) * (m.at(b, a) - m.at(b, a + 1));
        pref *= q.pow(e) / qint_factorial(k, q);
        const OpMatrix& gen = echeck[static_cast<size_t>(b)][static_cast<size_t>(a - b)];
        for (int rpt = 0; rpt < k; ++rpt) vec = gen.apply(vec);
      }
    // The overall power splits per matrix: the sum's m^c_c off-diagonal
    // entries contribute (q - q^{-1}) each, the remaining n_c - m^c_c
    // factors the opposite sign.
    int diag = 0;
    for (int b = 1; b <= N - 1; ++b) diag += m.at(b, b);
    pref *= (q - qi).pow(diag) * (qi - q).pow(c.total() - diag);
    auto cf = [&](const VariableAssignment& tt) {
      Rational outc(1);
      for (int a = 2; a <= N - 1; ++a)
        for (int b = 1; b <= a - 1; ++b) {
          const int mba = prefix_m(m, b, a);
          const int mba1 = prefix_m(m, b, a - 1);
          const long lam = rep.weights[static_cast<size_t>(a - 1)];  // Lambda_a
          for (int l = 0; l <= m.at(b, a) - 1; ++l) {
            const Rational& ta = tt.at(a, mba - l);
            const Rational den = tt.at(a - 1, mba1 - l) - ta;
            if (den.is_zero()) throw ResampleError("tv_y coefficient pole");
            outc *= (q.pow(lam) * ta - q.pow(-lam) * z) / den;
            for (int lp = mba1 - l + 1; lp <= c.count(a - 1); ++lp) {
              const Rational den2 = ta - tt.at(a - 1, lp);
              if (den2.is_zero()) throw ResampleError("tv_y coefficient pole");
              outc *= (q * ta - qi * tt.at(a - 1, lp)) / den2;
            }
          }
        }
      return outc;
    };
    const Rational symc = sym_tv_scalar(c, task.t, q, cf);
    if (breakdown)
      breakdown->push_back("tv_y " + m.str() + ": scalar=" + (pref * symc).str() +
                           " opvec=" + vec_str(vec));
    axpy(total, pref * symc, vec);
  }
  BetheVector out;
  out.route = Route::tv_y;
  out.coords = std::move(total);
  out.fingerprint = task.fingerprint();
  return out;
}

namespace {

using Factor = std::pair<std::pair<int, int>, Rational>;  // ((i,j), t)

std::vector<Rational> apply_factors(const ModuleWithL& mod, const std::vector<Factor>& factors,
                                    std::vector<Rational> vec) {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    vec = mod.lplus.block(it->first.first, it->first.second, it->second).apply(vec);
  return vec;
}

}  // namespace

BetheVector weight_fn_w(const BetheTask& task) {
  const Composition& c = task.comp;
  const ModuleWithL& mod = task.module;
  const int N = c.N;
  const Rational& q = task.q;
  const Rational qi = q.inverse();
  const auto mats = enumerate_admissible_m(c);

  auto summand = [&](const VariableAssignment& tt) {
    std::vector<Rational> acc(static_cast<size_t>(mod.rep.dim));
    for (const AdmissibleM& m : mats) {
      Rational pref(1);
      int diag = 0;
      for (int a = 1; a <= N - 1; ++a) {
        diag += m.at(a, a);
        for (int b = a; b <= N - 1; ++b) pref /= qint_factorial(m.at(a, b) - m.at(a, b + 1), q);
      }
      pref *= (qi - q).pow(c.total() - diag);
      pref *= coeff_Y(m, c, tt, q);
      std::vector<Factor> factors;
      for (int a = 1; a <= N - 1; ++a) {
        for (int b = N - 1; b >= a; --b)
          for (int l = c.count(a) - m.at(a, b) + 1; l <= c.count(a) - m.at(a, b + 1); ++l)
            factors.push_back({{a, b + 1}, tt.at(a, l)});
        for (int l = 1; l <= c.count(a) - m.at(a, a); ++l) factors.push_back({{a, a}, tt.at(a, l)});
      }
      axpy(acc, pref, apply_factors(mod, factors, mod.rep.singular));
    }
    return acc;
  };
  BetheVector out;
  out.route = Route::w;
  out.coords = q_symmetrize_tv<std::vector<Rational>>(
      c, task.t, q, summand, std::vector<Rational>(static_cast<size_t>(mod.rep.dim)), kVecAcc);
  out.fingerprint = task.fingerprint();
  return out;
}

BetheVector weight_fn_w_hat(const BetheTask& task) {
  const Composition& c = task.comp;
  const ModuleWithL& mod = task.module;
  const int N = c.N;
  const Rational& q = task.q;
  const Rational qi = q.inverse();
  const auto mats = enumerate_admissible_s(c);

  auto summand = [&](const VariableAssignment& tt) {
    std::vector<Rational> acc(static_cast<size_t>(mod.rep.dim));
    for (const AdmissibleS& s : mats) {
      Rational pref(1);
      int diag = 0;
      for (int b = 1; b <= N - 1; ++b) {
        diag += s.at(b, b);
        for (int a = 1; a <= b; ++a) pref /= qint_factorial(s.at(b, a) - s.at(b, a - 1), q);
      }
      pref *= (q - qi).pow(c.total() - diag);
      pref *= coeff_X(s, c, tt, q);
      std::vector<Factor> factors;
      for (int b = N - 1; b >= 1; --b) {
        for (int a = 1; a <= b; ++a)
          for (int l = s.at(b, a - 1) + 1; l <= s.at(b, a); ++l)
            factors.push_back({{a, b + 1}, tt.at(b, l)});
        for (int l = s.at(b, b) + 1; l <= c.count(b); ++l) factors.push_back({{b + 1, b + 1}, tt.at(b, l)});
      }
      axpy(acc, pref, apply_factors(mod, factors, mod.rep.singular));
    }
    return acc;
  };
  BetheVector out;
  out.route = Route::w_hat;
  out.coords = q_symmetrize_tv<std::vector<Rational>>(
      c, task.t, q, summand, std::vector<Rational>(static_cast<size_t>(mod.rep.dim)), kVecAcc);
  out.fingerprint = task.fingerprint();
  return out;
}

BetheVector compute_route(const BetheTask& task, Route r) {
  switch (r) {
    case Route::trace: return bethe_trace(task);
    case Route::tv_x: return bethe_tv_x(task);
    case Route::tv_y: return bethe_tv_y(task);
    case Route::w: return weight_fn_w(task);
    case Route::w_hat: return weight_fn_w_hat(task);
  }
  throw ConfigError("unknown route");
}

bool weight_check(const BetheVector& vec, const BetheTask& task) {
  if (vec_is_zero(vec.coords)) return true;
  const Composition& c = task.comp;
  const ModuleRep& rep = task.module.rep;
  for (int a = 1; a <= c.N; ++a) {
    const long before = a >= 2 ? c.count(a - 1) : 0;            // n_{a-1}, n_0 = 0
    const long after = a <= c.N - 1 ? c.count(a) : 0;           // n_a,     n_N = 0
    const Rational ev = task.q.pow(rep.weights[static_cast<size_t>(a - 1)] + before - after);
    std::vector<Rational> want = vec.coords;
    for (auto& x : want) x *= ev;
    if (rep.cartan(a).apply(vec.coords) != want) return false;
  }
  return true;
}

RouteReport cross_validate(const BetheTask& task, const std::vector<Route>& routes) {
  RouteReport report;
  for (Route r : routes) report.vectors.push_back(compute_route(task, r));
  for (size_t i = 1; i < report.vectors.size(); ++i) {
    if (report.vectors[i].coords == report.vectors[0].coords) continue;
    report.agree = false;
    const auto& a = report.vectors[0];
    const auto& b = report.vectors[i];
    for (size_t k = 0; k < a.coords.size(); ++k)
      if (a.coords[k] != b.coords[k]) {
        report.first_mismatch = std::string(route_name(a.route)) + " vs " + route_name(b.route) +
                                " differ first at coordinate " + std::to_string(k) + ": " +
                                a.coords[k].str() + " vs " + b.coords[k].str();
        break;
      }
    break;
  }
  if (!report.agree && task.module.z) {
    // Per-admissible-matrix breakdown so a scalar prefactor slip in either
    // closed form can be isolated matrix by matrix.
    bethe_tv_x_detail(task, &report.breakdown);
    bethe_tv_y_detail(task, &report.breakdown);
  }
  for (const auto& v : report.vectors)
    if (!weight_check(v, task)) report.weight_ok = false;
  return report;
}

}  // namespace uqgln
