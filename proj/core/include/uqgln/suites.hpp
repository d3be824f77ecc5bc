#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uqgln/config.hpp"

namespace uqgln {

struct CheckRecord {
  std::string name;
  std::string fingerprint;  // short hash of the check inputs
  std::string verdict;      // "pass" | "fail" | "exhausted"
  std::string detail;       // first-mismatch information on failure
};

struct Report {
  std::vector<CheckRecord> checks;
  std::string verdict;  // "pass" | "fail" | "exhausted"
  int exit_code = 0;    // 0 pass, 1 identity failure, 3 sampling exhaustion
};

/// Runs the selected suites (all of them when the config lists none):
/// ybe, rll, serre, gauss, currents, qsym, routes.
Report run_suite(const RunConfig& cfg);

/// Deterministic JSON serialization of the report; wall times are logged to
/// stderr only so reruns are byte-identical.
std::string report_json(const RunConfig& cfg, const Report& report);

/// Runs one Bethe task with the configured routes and serializes the result.
/// Exit code through `exit_code`: 0 agree, 1 mismatch.
std::string compute_json(const RunConfig& cfg, int& exit_code);

/// Admissible-matrix enumerations for inspection.
std::string enumerate_json(const RunConfig& cfg);

/// Runs independent jobs on a small pool; results keep their index order, so
/// reports do not depend on the thread count.
std::vector<CheckRecord> run_jobs(const std::vector<std::function<CheckRecord()>>& jobs, int threads);

}  // namespace uqgln
