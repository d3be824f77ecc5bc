#include "uqgln/config.hpp"

#include <json.hpp>

#include "uqgln/errors.hpp"
#include "uqgln/rng.hpp"

namespace uqgln {

using nlohmann::json;

namespace {

Rational parse_scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), where);
    }
  }
  throw ConfigError("expected a rational as string \"p/q\" or integer", where);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object", "/");
  RunConfig cfg;

  if (!doc.contains("N") || !doc["N"].is_number_integer())
    throw ConfigError("missing integer field N", "/N");
  cfg.N = doc["N"].get<int>();
  if (cfg.N < 2 || cfg.N > 8) throw ConfigError("N must be in 2..8", "/N");

  if (!doc.contains("n") || !doc["n"].is_array()) throw ConfigError("missing array field n", "/n");
  for (const auto& x : doc["n"]) {
    if (!x.is_number_integer() || x.get<int>() < 0)
      throw ConfigError("n entries must be nonnegative integers", "/n");
    cfg.n.push_back(x.get<int>());
  }
  if (static_cast<int>(cfg.n.size()) != cfg.N - 1)
    throw ConfigError("n must have exactly N-1 entries", "/n");

  if (!doc.contains("q")) throw ConfigError("missing field q", "/q");
  cfg.q = parse_scalar(doc["q"], "/q");
  if (cfg.q.is_zero() || cfg.q == Rational(1) || cfg.q == Rational(-1))
    throw ConfigError("q must be nonzero, not +-1", "/q");

  if (!doc.contains("module") || !doc["module"].is_object())
    throw ConfigError("missing object field module", "/module");
  const json& mod = doc["module"];
  if (!mod.contains("kind") || !mod["kind"].is_string())
    throw ConfigError("module.kind must be \"evaluation\" or \"tensor\"", "/module/kind");
  cfg.module_kind = mod["kind"].get<std::string>();
  if (cfg.module_kind == "evaluation") {
    if (!mod.contains("z")) throw ConfigError("evaluation module needs z", "/module/z");
    cfg.zs.push_back(parse_scalar(mod["z"], "/module/z"));
  } else if (cfg.module_kind == "tensor") {
    if (!mod.contains("factors") || !mod["factors"].is_array() || mod["factors"].empty())
      throw ConfigError("tensor module needs a nonempty factors array", "/module/factors");
    size_t idx = 0;
    for (const auto& f : mod["factors"]) {
      const std::string where = "/module/factors/" + std::to_string(idx++);
      if (!f.is_object() || !f.contains("z")) throw ConfigError("factor needs z", where);
      cfg.zs.push_back(parse_scalar(f["z"], where + "/z"));
    }
  } else {
    throw ConfigError("module.kind must be \"evaluation\" or \"tensor\"", "/module/kind");
  }
  for (size_t i = 0; i < cfg.zs.size(); ++i)
    if (cfg.zs[i].is_zero())
      throw ConfigError("evaluation point z must be nonzero", "/module");
  if (mod.contains("weights")) {
    // Modules are realized as vector representations and their tensor
    // products; any explicit weights must match that realization.
    const json& wj = mod["weights"];
    if (!wj.is_array() || static_cast<int>(wj.size()) != cfg.N)
      throw ConfigError("module.weights must list N integer exponents", "/module/weights");
    std::vector<long> want(static_cast<size_t>(cfg.N), 0);
    want[0] = cfg.module_kind == "evaluation" ? 1 : static_cast<long>(cfg.zs.size());
    for (int a = 0; a < cfg.N; ++a)
      if (!wj[static_cast<size_t>(a)].is_number_integer() ||
          wj[static_cast<size_t>(a)].get<long>() != (a == 0 ? want[0] : 0))
        throw ConfigError("only vector-representation weights are realizable", "/module/weights");
  }

  if (doc.contains("t")) {
    const json& tj = doc["t"];
    if (!tj.is_array() || static_cast<int>(tj.size()) != cfg.N - 1)
      throw ConfigError("t must list one group per type", "/t");
    std::vector<std::vector<Rational>> tt;
    for (int a = 0; a < cfg.N - 1; ++a) {
      const json& g = tj[static_cast<size_t>(a)];
      const std::string where = "/t/" + std::to_string(a);
      if (!g.is_array() || static_cast<int>(g.size()) != cfg.n[static_cast<size_t>(a)])
        throw ConfigError("t group size must match n", where);
      std::vector<Rational> group;
      for (size_t l = 0; l < g.size(); ++l)
        group.push_back(parse_scalar(g[l], where + "/" + std::to_string(l)));
      tt.push_back(std::move(group));
    }
    cfg.explicit_t = std::move(tt);
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() &&
        !(doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0))
      throw ConfigError("seed must be a nonnegative integer", "/seed");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("routes")) {
    if (!doc["routes"].is_array()) throw ConfigError("routes must be an array", "/routes");
    for (const auto& r : doc["routes"]) {
      if (!r.is_string()) throw ConfigError("route names must be strings", "/routes");
      const auto route = route_from_name(r.get<std::string>());
      if (!route) throw ConfigError("unknown route \"" + r.get<std::string>() + "\"", "/routes");
      cfg.routes.push_back(*route);
    }
  }
  if (doc.contains("suites")) {
    if (!doc["suites"].is_array()) throw ConfigError("suites must be an array", "/suites");
    for (const auto& s : doc["suites"]) {
      if (!s.is_string()) throw ConfigError("suite names must be strings", "/suites");
      cfg.suites.push_back(s.get<std::string>());
    }
  }
  if (doc.contains("max_cells")) {
    if (!doc["max_cells"].is_number_integer() || doc["max_cells"].get<long>() < 1)
      throw ConfigError("max_cells must be a positive integer", "/max_cells");
    cfg.max_cells = doc["max_cells"].get<long>();
  }
  if (doc.contains("threads")) {
    if (!doc["threads"].is_number_integer() || doc["threads"].get<int>() < 0)
      throw ConfigError("threads must be a nonnegative integer", "/threads");
    cfg.threads = doc["threads"].get<int>();
  }
  if (doc.contains("retries")) {
    if (!doc["retries"].is_number_integer() || doc["retries"].get<int>() < 1)
      throw ConfigError("retries must be a positive integer", "/retries");
    cfg.retries = doc["retries"].get<int>();
  }
  if (doc.contains("corrupt_r")) {
    if (!doc["corrupt_r"].is_boolean()) throw ConfigError("corrupt_r must be a boolean", "/corrupt_r");
    cfg.corrupt_r = doc["corrupt_r"].get<bool>();
  }
  cfg.raw_json = doc.dump();
  return cfg;
}

std::vector<Route> default_routes(const RunConfig& cfg) {
  if (!cfg.routes.empty()) return cfg.routes;
  if (cfg.module_kind == "evaluation")
    return {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat};
  return {Route::trace, Route::w, Route::w_hat};
}

BetheTask make_task(const RunConfig& cfg, std::uint64_t sample_index) {
  BetheTask task;
  task.comp.N = cfg.N;
  task.comp.n = cfg.n;
  task.q = cfg.q;
  task.max_cells = cfg.max_cells;
  if (cfg.module_kind == "evaluation")
    task.module = make_evaluation_module(cfg.N, cfg.q, cfg.zs[0]);
  else
    task.module = make_tensor_module(cfg.N, cfg.q, cfg.zs);
  if (cfg.explicit_t) {
    task.t.t = *cfg.explicit_t;
  } else {
    Sampler sampler(derive_seed(cfg.seed, "assignment", sample_index));
    task.t = sample_assignment(task.comp, cfg.q, cfg.zs, sampler, cfg.retries);
  }
  return task;
}

}  // namespace uqgln
