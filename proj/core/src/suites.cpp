#include "uqgln/suites.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <thread>

#include "uqgln/errors.hpp"
#include "uqgln/gauss.hpp"
#include "uqgln/rmatrix.hpp"
#include "uqgln/rng.hpp"
#include "uqgln/util.hpp"
#include "uqgln/version.hpp"

namespace uqgln {

using nlohmann::json;

namespace {

std::string fp(const std::string& inputs) { return hex16(fnv1a64(inputs)); }

CheckRecord pass_fail(const std::string& name, const std::string& fingerprint, bool ok,
                      const std::string& detail) {
  return {name, fingerprint, ok ? "pass" : "fail", ok ? "" : detail};
}

/// Runs `body` with a fresh deterministic sampler until it stops throwing
/// ResampleError, within the retry budget.
CheckRecord retrying(const std::string& name, const RunConfig& cfg, const char* purpose,
                     std::uint64_t index, const std::function<CheckRecord(Sampler&)>& body) {
  for (int attempt = 0; attempt < cfg.retries; ++attempt) {
    Sampler sampler(derive_seed(cfg.seed, purpose, index * 1009 + static_cast<std::uint64_t>(attempt)));
    try {
      return body(sampler);
    } catch (const ResampleError& e) {
      log_note(name + ": resample (" + e.what() + "), attempt " + std::to_string(attempt + 1));
    } catch (const ExhaustedError& e) {
      return {name, "", "exhausted", e.what()};
    }
  }
  return {name, "", "exhausted", "unlucky sampling: retry budget exceeded"};
}

std::string idx2(std::uint64_t i) {
  std::string s = std::to_string(i);
  while (s.size() < 2) s = "0" + s;
  return s;
}

/// Fresh module of the configured kind with sampled q and evaluation points.
ModuleWithL sample_module(const RunConfig& cfg, Sampler& sampler, Rational* q_out) {
  const Rational q = sampler.generic_q();
  std::vector<Rational> zs;
  for (size_t i = 0; i < cfg.zs.size(); ++i) {
    for (;;) {
      Rational z = sampler.positive_rational();
      bool fresh = true;
      for (const auto& other : zs)
        if (other == z) fresh = false;
      if (fresh) {
        zs.push_back(std::move(z));
        break;
      }
    }
  }
  if (q_out) *q_out = q;
  if (cfg.module_kind == "evaluation") return make_evaluation_module(cfg.N, q, zs[0]);
  return make_tensor_module(cfg.N, q, zs);
}

std::vector<CheckRecord> suite_ybe(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  for (std::uint64_t i = 0; i < 100; ++i) {
    jobs.push_back([&cfg, i] {
      const std::string name = "ybe/sample_" + idx2(i);
      return retrying(name, cfg, "ybe", i, [&](Sampler& s) {
        const Rational q = s.generic_q();
        const Rational u = s.positive_rational();
        const Rational v = s.positive_rational();
        const Rational w = s.positive_rational();
        const std::string inputs = "q=" + q.str() + ";u=" + u.str() + ";v=" + v.str() + ";w=" + w.str();
        const YbeResult res = check_ybe(cfg.N, q, u, v, w, cfg.corrupt_r);
        return pass_fail(name, fp(inputs), res.ok, res.detail);
      });
    });
  }
  jobs.push_back([&cfg] {
    const std::string name = "ybe/r_at_equal_points_is_swap";
    return retrying(name, cfg, "ybe_swap", 0, [&](Sampler& s) {
      const Rational q = s.generic_q();
      const Rational u = s.positive_rational();
      const OpMatrix r = r_on_legs(cfg.N, 2, 1, 2, u, u, q, cfg.corrupt_r);
      OpMatrix swap(cfg.N * cfg.N, cfg.N * cfg.N);
      for (int a = 0; a < cfg.N; ++a)
        for (int b = 0; b < cfg.N; ++b) swap.at(b * cfg.N + a, a * cfg.N + b) = Rational(1);
      return pass_fail(name, fp("q=" + q.str() + ";u=" + u.str()), r == swap, "R(u,u) is not the swap");
    });
  });
  jobs.push_back([&cfg] {
    const std::string name = "ybe/r_at_q_one_is_identity";
    return retrying(name, cfg, "ybe_qone", 0, [&](Sampler& s) {
      const Rational u = s.positive_rational();
      Rational v = s.positive_rational();
      while (v == u) v = s.positive_rational();
      const OpMatrix r = r_on_legs(cfg.N, 2, 1, 2, u, v, Rational(1), cfg.corrupt_r);
      return pass_fail(name, fp("u=" + u.str() + ";v=" + v.str()),
                       r == OpMatrix::identity(cfg.N * cfg.N), "R at q=1 is not the identity");
    });
  });
  return run_jobs(jobs, cfg.threads);
}

std::vector<CheckRecord> suite_rll(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  for (std::uint64_t i = 0; i < 20; ++i) {
    jobs.push_back([&cfg, i] {
      const std::string name = "rll/sample_" + idx2(i);
      return retrying(name, cfg, "rll", i, [&](Sampler& s) {
        Rational q;
        const ModuleWithL mod = sample_module(cfg, s, &q);
        const Rational u = s.positive_rational();
        const Rational v = s.positive_rational();
        const std::string inputs = "q=" + q.str() + ";u=" + u.str() + ";v=" + v.str();
        struct Combo {
          const char* tag;
          const LOperatorPoly* a;
          const LOperatorPoly* b;
        };
        const Combo combos[3] = {{"pp", &mod.lplus, &mod.lplus},
                                 {"mm", &mod.lminus, &mod.lminus},
                                 {"pm", &mod.lplus, &mod.lminus}};
        for (const Combo& cb : combos) {
          const CheckResult r = check_rll(*cb.a, *cb.b, q, u, v);
          if (!r.ok) return pass_fail(name, fp(inputs), false, std::string(cb.tag) + ": " + r.detail);
        }
        return pass_fail(name, fp(inputs), true, "");
      });
    });
  }
  for (std::uint64_t i = 0; i < 5; ++i) {
    jobs.push_back([&cfg, i] {
      const std::string name = "rll/zero_modes_" + idx2(i);
      return retrying(name, cfg, "rll_zero", i, [&](Sampler& s) {
        Rational q;
        const ModuleWithL mod = sample_module(cfg, s, &q);
        CheckResult r = check_zero_mode_triangular(mod.lplus);
        if (r.ok) r = check_zero_mode_triangular(mod.lminus);
        if (r.ok) r = check_zero_mode_diagonal(mod.lplus, mod.lminus);
        return pass_fail(name, fp("q=" + q.str()), r.ok, r.detail);
      });
    });
  }
  return run_jobs(jobs, cfg.threads);
}

std::vector<CheckRecord> suite_serre(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  for (std::uint64_t i = 0; i < 5; ++i) {
    jobs.push_back([&cfg, i] {
      const std::string name = "serre/module_" + idx2(i);
      return retrying(name, cfg, "serre", i, [&](Sampler& s) {
        Rational q;
        const ModuleWithL mod = sample_module(cfg, s, &q);
        const CheckResult r = check_module(mod.rep);
        return pass_fail(name, fp("q=" + q.str()), r.ok, r.detail);
      });
    });
  }
  return run_jobs(jobs, cfg.threads);
}

std::vector<CheckRecord> suite_gauss(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  for (std::uint64_t i = 0; i < 10; ++i) {
    jobs.push_back([&cfg, i] {
      const std::string name = "gauss/roundtrip_" + idx2(i);
      return retrying(name, cfg, "gauss", i, [&](Sampler& s) {
        Rational q;
        const ModuleWithL mod = sample_module(cfg, s, &q);
        const Rational t = s.positive_rational();
        const std::string inputs = "q=" + q.str() + ";t=" + t.str();
        for (GaussFlavor flavor : {GaussFlavor::first, GaussFlavor::second}) {
          const GaussSample g = gauss_extract(mod.lplus, mod.lminus, t, flavor);
          const char* ftag = flavor == GaussFlavor::first ? "first" : "second";
          if (reconstruct_l(g, LSign::plus) != mod.lplus.eval_grid(t))
            return pass_fail(name, fp(inputs), false, std::string(ftag) + ": L^+ round trip failed");
          if (reconstruct_l(g, LSign::minus) != mod.lminus.eval_grid(t))
            return pass_fail(name, fp(inputs), false, std::string(ftag) + ": L^- round trip failed");
        }
        return pass_fail(name, fp(inputs), true, "");
      });
    });
  }
  return run_jobs(jobs, cfg.threads);
}

std::vector<CheckRecord> suite_currents(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  for (std::uint64_t i = 0; i < 20; ++i) {
    jobs.push_back([&cfg, i] {
      const std::string name = "currents/pair_" + idx2(i);
      return retrying(name, cfg, "currents", i, [&](Sampler& s) {
        Rational q;
        const ModuleWithL mod = sample_module(cfg, s, &q);
        const std::vector<Rational> zs = {s.positive_rational(), s.positive_rational(),
                                          s.positive_rational()};
        if (zs[0] == zs[1] || zs[0] == zs[2] || zs[1] == zs[2])
          throw ResampleError("coinciding current sample points");
        const std::string inputs = "q=" + q.str() + ";z=" + zs[0].str() + ";w=" + zs[1].str();
        for (const auto& rec : check_current_relations(mod, zs[0], zs[1]))
          if (!rec.ok) return pass_fail(name, fp(inputs), false, rec.name + ": " + rec.detail);
        for (const auto& rec : check_current_serre(mod, zs[0], zs[1], zs[2]))
          if (!rec.ok) return pass_fail(name, fp(inputs), false, rec.name + ": " + rec.detail);
        for (const auto& rec : check_composed_current_relations(mod, zs[0], zs[1]))
          if (!rec.ok) return pass_fail(name, fp(inputs), false, rec.name + ": " + rec.detail);
        return pass_fail(name, fp(inputs), true, "");
      });
    });
  }
  return run_jobs(jobs, cfg.threads);
}

Rational random_monomial(const VariableAssignment& t, const std::vector<long>& exps) {
  Rational out(1);
  size_t k = 0;
  for (const auto& group : t.t)
    for (const auto& x : group) out *= x.pow(exps[k++]);
  return out;
}

std::vector<long> draw_exponents(Sampler& s, int count) {
  std::vector<long> exps;
  for (int i = 0; i < count; ++i) exps.push_back(s.in_range(-2, 3));
  return exps;
}

std::vector<CheckRecord> suite_qsym(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  // The double symmetrization in (sym*) iterates |S_n|^2 terms; cap the
  // group order so arbitrarily large configured counts stay at desk scale.
  Composition conf_comp{cfg.N, cfg.n};
  for (;;) {
    long order = 1;
    for (int x : conf_comp.n)
      for (int k = 2; k <= x; ++k) order *= k;
    if (order <= 30) break;
    auto it = std::max_element(conf_comp.n.begin(), conf_comp.n.end());
    --(*it);
    log_note("qsym suite: clamped variable counts to keep the symmetric-group order small");
  }

  for (std::uint64_t i = 0; i < 20; ++i) {
    // (sym*) Sym-bar(Sym-bar f) = prod n_a! Sym-bar f on the config variable set.
    jobs.push_back([&cfg, conf_comp, i] {
      const std::string name = "qsym/sym_star_" + idx2(i);
      return retrying(name, cfg, "qsym_star", i, [&](Sampler& s) {
        const Rational q = s.generic_q();
        const VariableAssignment t = sample_assignment(conf_comp, q, {}, s);
        const auto exps = draw_exponents(s, conf_comp.total());
        auto f = [&](const VariableAssignment& tt) { return random_monomial(tt, exps); };
        auto symf = [&](const VariableAssignment& tt) { return sym_q_scalar(conf_comp, tt, q, f); };
        Rational factorial(1);
        for (int x : conf_comp.n)
          for (int k = 2; k <= x; ++k) factorial *= Rational(k);
        const Rational lhs = sym_q_scalar(conf_comp, t, q, symf);
        const Rational rhs = factorial * sym_q_scalar(conf_comp, t, q, f);
        return pass_fail(name, fp("q=" + q.str()), lhs == rhs,
                         "lhs=" + lhs.str() + " rhs=" + rhs.str());
      });
    });
  }

  for (std::uint64_t i = 0; i < 20; ++i) {
    // (sym_div) split through order-preserving shuffles, single type, n <= 4.
    jobs.push_back([&cfg, i] {
      const std::string name = "qsym/sym_div_" + idx2(i);
      return retrying(name, cfg, "qsym_div", i, [&](Sampler& s) {
        // walk the full grid 0 <= split <= n <= 4 across the 20 cases
        static constexpr int kPairs[14][2] = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2},
                                              {3, 0}, {3, 1}, {3, 2}, {3, 3}, {4, 0},
                                              {4, 1}, {4, 2}, {4, 3}, {4, 4}};
        const int n = kPairs[i % 14][0];
        const int split = kPairs[i % 14][1];
        const Rational q = s.generic_q();
        const Composition comp{2, {n}};
        const VariableAssignment t = sample_assignment(comp, q, {}, s);
        const auto exps = draw_exponents(s, n);
        auto f = [&](const VariableAssignment& tt) { return random_monomial(tt, exps); };
        const Rational lhs = sym_q_scalar(comp, t, q, f);

        const Composition comp_left{2, {split}};
        const Composition comp_right{2, {n - split}};
        auto blocks = [&](const VariableAssignment& uu) {
          VariableAssignment ul, ur;
          ul.t = {{uu.t[0].begin(), uu.t[0].begin() + split}};
          ur.t = {{uu.t[0].begin() + split, uu.t[0].end()}};
          auto outer = [&](const VariableAssignment& ll) {
            auto inner = [&](const VariableAssignment& rr) {
              VariableAssignment full;
              full.t = {{}};
              for (const auto& x : ll.t[0]) full.t[0].push_back(x);
              for (const auto& x : rr.t[0]) full.t[0].push_back(x);
              return f(full);
            };
            return sym_q_scalar(comp_right, ur, q, inner);
          };
          return sym_q_scalar(comp_left, ul, q, outer);
        };

        // Shuffles: sigma(1) < ... < sigma(split) and sigma(split+1) < ... < sigma(n).
        Rational rhs(0);
        std::vector<int> mask(static_cast<size_t>(n), 0);
        for (int k = 0; k < split; ++k) mask[static_cast<size_t>(k)] = 1;
        std::sort(mask.begin(), mask.end());
        do {
          std::vector<int> sigma;
          for (int posv = 0; posv < n; ++posv)
            if (mask[static_cast<size_t>(posv)] == 1) sigma.push_back(posv);
          for (int posv = 0; posv < n; ++posv)
            if (mask[static_cast<size_t>(posv)] == 0) sigma.push_back(posv);
          const PermTuple tup{sigma};
          rhs += inversion_factor(comp, t, q, tup) * blocks(permuted(t, tup));
        } while (std::next_permutation(mask.begin(), mask.end()));
        return pass_fail(name, fp("q=" + q.str() + ";n=" + std::to_string(n) + ";s=" +
                                  std::to_string(split)),
                         lhs == rhs, "lhs=" + lhs.str() + " rhs=" + rhs.str());
      });
    });
  }

  for (std::uint64_t i = 0; i < 20; ++i) {
    // (relat) Sym^(q) f = prod (q^{-1}t_l - q t_l')/(t_l - t_l') * Sym-bar f.
    jobs.push_back([&cfg, conf_comp, i] {
      const std::string name = "qsym/relat_" + idx2(i);
      return retrying(name, cfg, "qsym_relat", i, [&](Sampler& s) {
        const Rational q = s.generic_q();
        const VariableAssignment t = sample_assignment(conf_comp, q, {}, s);
        const auto exps = draw_exponents(s, conf_comp.total());
        auto f = [&](const VariableAssignment& tt) { return random_monomial(tt, exps); };
        const Rational lhs = sym_tv_scalar(conf_comp, t, q, f);
        const Rational rhs = varpi(conf_comp, t, q) * sym_q_scalar(conf_comp, t, q, f);
        return pass_fail(name, fp("q=" + q.str()), lhs == rhs,
                         "lhs=" + lhs.str() + " rhs=" + rhs.str());
      });
    });
  }

  for (std::uint64_t i = 0; i < 20; ++i) {
    // (po-sim) (1/n!) Sym-bar(varpi^{-1} G) = (1/[n]_q!) Sym-bar(G), G symmetric.
    jobs.push_back([&cfg, i] {
      const std::string name = "qsym/po_sim_" + idx2(i);
      return retrying(name, cfg, "qsym_posim", i, [&](Sampler& s) {
        const int n = 1 + static_cast<int>(i % 4);  // cover every n <= 4
        const Rational q = s.generic_q();
        const Composition comp{2, {n}};
        const VariableAssignment t = sample_assignment(comp, q, {}, s);
        const auto exps = draw_exponents(s, n);
        auto raw = [&](const VariableAssignment& tt) { return random_monomial(tt, exps); };
        auto gsym = [&](const VariableAssignment& tt) { return sym_plain_scalar(comp, tt, raw); };
        auto weighted = [&](const VariableAssignment& tt) {
          return varpi(comp, tt, q).inverse() * gsym(tt);
        };
        Rational nfact(1);
        for (int k = 2; k <= n; ++k) nfact *= Rational(k);
        const Rational lhs = nfact.inverse() * sym_q_scalar(comp, t, q, weighted);
        const Rational rhs = qint_factorial(n, q).inverse() * sym_q_scalar(comp, t, q, gsym);
        return pass_fail(name, fp("q=" + q.str() + ";n=" + std::to_string(n)), lhs == rhs,
                         "lhs=" + lhs.str() + " rhs=" + rhs.str());
      });
    });
  }

  for (std::uint64_t i = 0; i < 20; ++i) {
    // (exa3) Sym-bar of a q-symmetric series multiplies by prod n_a!.
    jobs.push_back([&cfg, conf_comp, i] {
      const std::string name = "qsym/exa3_" + idx2(i);
      return retrying(name, cfg, "qsym_exa3", i, [&](Sampler& s) {
        const Rational q = s.generic_q();
        const VariableAssignment t = sample_assignment(conf_comp, q, {}, s);
        const auto exps = draw_exponents(s, conf_comp.total());
        auto f = [&](const VariableAssignment& tt) { return random_monomial(tt, exps); };
        auto qsym_f = [&](const VariableAssignment& tt) { return sym_q_scalar(conf_comp, tt, q, f); };
        Rational factorial(1);
        for (int x : conf_comp.n)
          for (int k = 2; k <= x; ++k) factorial *= Rational(k);
        const Rational lhs = sym_q_scalar(conf_comp, t, q, qsym_f);
        const Rational rhs = factorial * qsym_f(t);
        return pass_fail(name, fp("q=" + q.str()), lhs == rhs,
                         "lhs=" + lhs.str() + " rhs=" + rhs.str());
      });
    });
  }

  jobs.push_back([&cfg, conf_comp] {
    // Enumeration count check against a bounded grid search.
    const std::string name = "qsym/enumeration_bruteforce";
    return retrying(name, cfg, "qsym_enum", 0, [&](Sampler&) {
      const auto ss = enumerate_admissible_s(conf_comp);
      const auto ms = enumerate_admissible_m(conf_comp);
      long count_s = 0, count_m = 0;
      // grid over all lower-triangular matrices bounded entrywise by max n
      std::vector<int> entries;
      const int cells = conf_comp.N * (conf_comp.N - 1) / 2;
      int maxn = 0;
      for (int x : conf_comp.n) maxn = std::max(maxn, x);
      std::function<void(int, std::vector<int>&)> rec_s = [&](int pos, std::vector<int>& vals) {
        if (pos == cells) {
          AdmissibleS cand;
          cand.N = conf_comp.N;
          int k = 0;
          for (int b = 1; b <= conf_comp.N - 1; ++b) {
            cand.rows.push_back({});
            for (int a = 1; a <= b; ++a) cand.rows.back().push_back(vals[static_cast<size_t>(k++)]);
          }
          bool ok = true;
          for (int b = 1; b <= conf_comp.N - 1 && ok; ++b)
            for (int a = 1; a <= b && ok; ++a)
              if (cand.at(b, a) < cand.at(b, a - 1)) ok = false;
          for (int a = 1; a <= conf_comp.N - 1 && ok; ++a) {
            int sum = 0;
            for (int b = a; b <= conf_comp.N - 1; ++b) sum += cand.at(b, a);
            if (sum != conf_comp.count(a)) ok = false;
          }
          if (ok) ++count_s;
          return;
        }
        for (int v = 0; v <= maxn; ++v) {
          vals.push_back(v);
          rec_s(pos + 1, vals);
          vals.pop_back();
        }
      };
      std::vector<int> scratch;
      rec_s(0, scratch);
      std::function<void(int, std::vector<int>&)> rec_m = [&](int pos, std::vector<int>& vals) {
        if (pos == cells) {
          AdmissibleM cand;
          cand.N = conf_comp.N;
          int k = 0;
          for (int b = 1; b <= conf_comp.N - 1; ++b) {
            cand.rows.push_back({});
            for (int a = b; a <= conf_comp.N - 1; ++a) cand.rows.back().push_back(vals[static_cast<size_t>(k++)]);
          }
          bool ok = true;
          for (int b = 1; b <= conf_comp.N - 1 && ok; ++b)
            for (int a = b; a <= conf_comp.N - 1 && ok; ++a)
              if (cand.at(b, a) < cand.at(b, a + 1)) ok = false;
          for (int a = 1; a <= conf_comp.N - 1 && ok; ++a) {
            int sum = 0;
            for (int b = 1; b <= a; ++b) sum += cand.at(b, a);
            if (sum != conf_comp.count(a)) ok = false;
          }
          if (ok) ++count_m;
          return;
        }
        for (int v = 0; v <= maxn; ++v) {
          vals.push_back(v);
          rec_m(pos + 1, vals);
          vals.pop_back();
        }
      };
      scratch.clear();
      rec_m(0, scratch);
      const bool ok = count_s == static_cast<long>(ss.size()) && count_m == static_cast<long>(ms.size());
      return pass_fail(name, fp("counts"), ok,
                       "enumerated s=" + std::to_string(ss.size()) + " m=" + std::to_string(ms.size()) +
                           " grid s=" + std::to_string(count_s) + " m=" + std::to_string(count_m));
    });
  });

  return run_jobs(jobs, cfg.threads);
}

std::vector<CheckRecord> suite_routes(const RunConfig& cfg) {
  std::vector<std::function<CheckRecord()>> jobs;
  const std::vector<Route> routes = default_routes(cfg);
  for (std::uint64_t i = 0; i < 5; ++i) {
    jobs.push_back([&cfg, routes, i] {
      const std::string name = "routes/task_" + idx2(i);
      return retrying(name, cfg, "routes", i, [&](Sampler& s) {
        BetheTask task;
        task.comp.N = cfg.N;
        task.comp.n = cfg.n;
        Rational q;
        task.module = sample_module(cfg, s, &q);
        task.q = q;
        task.max_cells = cfg.max_cells;
        task.t = sample_assignment(task.comp, q, task.module.factor_zs, s);
        const RouteReport rr = cross_validate(task, routes);
        std::string detail = rr.first_mismatch;
        for (const auto& line : rr.breakdown) detail += "\n" + line;
        if (!rr.weight_ok && rr.agree) detail = "weight property violated";
        return pass_fail(name, task.fingerprint(), rr.agree && rr.weight_ok, detail);
      });
    });
  }
  return run_jobs(jobs, cfg.threads);
}

}  // namespace

std::vector<CheckRecord> run_jobs(const std::vector<std::function<CheckRecord()>>& jobs, int threads) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(jobs.size()) == 0 ? 1 : static_cast<int>(jobs.size()));
  std::vector<CheckRecord> out(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& e) {
        out[i] = {"job_" + std::to_string(i), "", "fail", e.what()};
      }
      const auto us =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
              .count();
      log_note(out[i].name + " " + out[i].verdict + " (" + std::to_string(us / 1000.0) + " ms)");
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

Report run_suite(const RunConfig& cfg) {
  static const std::vector<std::string> kAll = {"ybe",      "rll",  "serre", "gauss",
                                                "currents", "qsym", "routes"};
  const std::vector<std::string>& wanted = cfg.suites.empty() ? kAll : cfg.suites;
  Report report;
  for (const std::string& suite : wanted) {
    std::vector<CheckRecord> recs;
    if (suite == "ybe")
      recs = suite_ybe(cfg);
    else if (suite == "rll")
      recs = suite_rll(cfg);
    else if (suite == "serre")
      recs = suite_serre(cfg);
    else if (suite == "gauss")
      recs = suite_gauss(cfg);
    else if (suite == "currents")
      recs = suite_currents(cfg);
    else if (suite == "qsym")
      recs = suite_qsym(cfg);
    else if (suite == "routes")
      recs = suite_routes(cfg);
    else
      throw ConfigError("unknown suite \"" + suite + "\"", "/suites");
    report.checks.insert(report.checks.end(), recs.begin(), recs.end());
  }
  bool any_fail = false, any_exhausted = false;
  for (const auto& rec : report.checks) {
    if (rec.verdict == "fail") any_fail = true;
    if (rec.verdict == "exhausted") any_exhausted = true;
  }
  report.verdict = any_fail ? "fail" : any_exhausted ? "exhausted" : "pass";
  report.exit_code = any_fail ? 1 : any_exhausted ? 3 : 0;
  return report;
}

std::string report_json(const RunConfig& cfg, const Report& report) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["config"] = json::parse(cfg.raw_json);
  json checks = json::array();
  size_t passed = 0;
  for (const auto& rec : report.checks) {
    json c;
    c["name"] = rec.name;
    c["fingerprint"] = rec.fingerprint;
    c["verdict"] = rec.verdict;
    c["detail"] = rec.detail;
    checks.push_back(c);
    if (rec.verdict == "pass") ++passed;
  }
  doc["checks"] = checks;
  doc["summary"] = {{"total", report.checks.size()},
                    {"passed", passed},
                    {"failed", report.checks.size() - passed}};
  doc["verdict"] = report.verdict;
  doc["exit_code"] = report.exit_code;
  return doc.dump(2) + "\n";
}

std::string compute_json(const RunConfig& cfg, int& exit_code) {
  const BetheTask task = make_task(cfg, 0);
  const std::vector<Route> routes = default_routes(cfg);
  const RouteReport rr = cross_validate(task, routes);
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["config"] = json::parse(cfg.raw_json);
  json tj = json::array();
  for (const auto& group : task.t.t) {
    json g = json::array();
    for (const auto& x : group) g.push_back(x.str());
    tj.push_back(g);
  }
  doc["task"] = {{"fingerprint", task.fingerprint()}, {"t", tj}, {"q", task.q.str()}};
  json zs = json::array();
  for (const auto& z : task.module.factor_zs) zs.push_back(z.str());
  doc["task"]["z"] = zs;
  json rv;
  for (const auto& vec : rr.vectors) {
    json coords = json::array();
    for (const auto& x : vec.coords) coords.push_back(x.str());
    rv[route_name(vec.route)] = coords;
  }
  doc["routes"] = rv;
  doc["agree"] = rr.agree;
  doc["weight_check"] = rr.weight_ok;
  doc["first_mismatch"] = rr.first_mismatch;
  json breakdown = json::array();
  for (const auto& line : rr.breakdown) breakdown.push_back(line);
  doc["breakdown"] = breakdown;
  exit_code = rr.agree && rr.weight_ok ? 0 : 1;
  doc["exit_code"] = exit_code;
  return doc.dump(2) + "\n";
}

std::string enumerate_json(const RunConfig& cfg) {
  const Composition comp{cfg.N, cfg.n};
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["N"] = cfg.N;
  doc["n"] = cfg.n;
  json sj = json::array();
  for (const auto& s : enumerate_admissible_s(comp)) {
    json rows = json::array();
    for (const auto& row : s.rows) rows.push_back(row);
    sj.push_back(rows);
  }
  json mj = json::array();
  for (const auto& m : enumerate_admissible_m(comp)) {
    json rows = json::array();
    for (const auto& row : m.rows) rows.push_back(row);
    mj.push_back(rows);
  }
  doc["s_matrices"] = sj;
  doc["m_matrices"] = mj;
  doc["counts"] = {{"s", sj.size()}, {"m", mj.size()}};
  return doc.dump(2) + "\n";
}

}  // namespace uqgln
