#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "uqgln/errors.hpp"
#include "uqgln/suites.hpp"
#include "uqgln/util.hpp"
#include "uqgln/version.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw uqgln::ConfigError("cannot open config file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOpts {
  std::string config_path;
  long seed = -1;
  int threads = -1;
  long max_cells = -1;
  std::vector<std::string> suites;
};

uqgln::RunConfig load(const CommonOpts& opts) {
  uqgln::RunConfig cfg = uqgln::parse_config(slurp(opts.config_path));
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
  if (opts.threads >= 0) cfg.threads = opts.threads;
  if (opts.max_cells > 0) cfg.max_cells = opts.max_cells;
  if (!opts.suites.empty()) cfg.suites = opts.suites;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_suites) {
  cmd->add_option("-c,--config", opts.config_path, "JSON run configuration")->required();
  cmd->add_option("--seed", opts.seed, "Override the config seed");
  cmd->add_option("--threads", opts.threads, "Worker threads (0 = hardware)");
  cmd->add_option("--max-cells", opts.max_cells, "Cap on N^M*dim(V) for the trace construction");
  if (with_suites) cmd->add_option("--suite", opts.suites, "Suite to run (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact off-shell Bethe vector construction and verification for U_q(gl_N^) modules"};
  app.require_subcommand(1);

  CLI::App* cmd_version = app.add_subcommand("version", "Print tool name and version");
  CommonOpts compute_opts, verify_opts, enum_opts;
  CLI::App* cmd_compute =
      app.add_subcommand("compute", "Compute one Bethe task and print the per-route vectors");
  add_common(cmd_compute, compute_opts, false);
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run verification suites and print the report");
  add_common(cmd_verify, verify_opts, true);
  CLI::App* cmd_enum =
      app.add_subcommand("enumerate", "Enumerate the admissible matrices of the configured n");
  add_common(cmd_enum, enum_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_version->parsed()) {
      std::cout << "{\"tool\":\"" << uqgln::kToolName << "\",\"version\":\"" << uqgln::kVersion
                << "\"}\n";
      return 0;
    }
    if (cmd_enum->parsed()) {
      std::cout << uqgln::enumerate_json(load(enum_opts));
      return 0;
    }
    if (cmd_compute->parsed()) {
      int exit_code = 0;
      std::cout << uqgln::compute_json(load(compute_opts), exit_code);
      return exit_code;
    }
    if (cmd_verify->parsed()) {
      const uqgln::RunConfig cfg = load(verify_opts);
      const uqgln::Report report = uqgln::run_suite(cfg);
      std::cout << uqgln::report_json(cfg, report);
      return report.exit_code;
    }
  } catch (const uqgln::ResampleError& e) {
    uqgln::log_note(std::string("sample hit a pole: ") + e.what() +
                    " (pin different t values or change the seed)");
    return 2;
  } catch (const uqgln::ExhaustedError& e) {
    uqgln::log_note(std::string("sampling exhausted: ") + e.what());
    return 3;
  } catch (const uqgln::ConfigError& e) {
    uqgln::log_note(std::string("configuration error: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    uqgln::log_note(std::string("error: ") + e.what());
    return 2;
  }
  return 2;
}
