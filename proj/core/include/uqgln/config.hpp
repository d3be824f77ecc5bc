#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqgln/bethe.hpp"
#include "uqgln/rational.hpp"

namespace uqgln {

/// Parsed and validated run configuration. Scalars travel as strings "p/q"
/// to keep the JSON exact.
struct RunConfig {
  int N = 2;
  std::vector<int> n;        // N-1 entries
  Rational q;
  std::string module_kind;   // "evaluation" | "tensor"
  std::vector<Rational> zs;  // one entry for evaluation, factor list for tensor
  std::optional<std::vector<std::vector<Rational>>> explicit_t;
  std::uint64_t seed = 1;
  std::vector<Route> routes;
  std::vector<std::string> suites;
  long max_cells = 200000;
  int threads = 0;   // 0: hardware default
  int retries = 50;  // resampling budget per check
  bool corrupt_r = false;  // negative-control fixture for the ybe suite
  std::string raw_json;    // canonical echo for the report
};

/// Parses a JSON document; throws ConfigError with a JSON-pointer location.
RunConfig parse_config(const std::string& text);

/// Instantiates the configured module and one Bethe task; variables are
/// sampled from the seed stream unless the config pins them.
BetheTask make_task(const RunConfig& cfg, std::uint64_t sample_index);

/// Default route set for the configured module kind: all five routes on an
/// evaluation module, the universal three on tensor products.
std::vector<Route> default_routes(const RunConfig& cfg);

}  // namespace uqgln
