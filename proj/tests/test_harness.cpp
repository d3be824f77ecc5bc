#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgln/errors.hpp"
#include "uqgln/suites.hpp"

using namespace uqgln;

TEST_CASE("parse_config accepts the documented schema instance") {
  const RunConfig cfg = parse_config(
      R"({"N":2,"n":[1],"q":"3/2","module":{"kind":"evaluation","z":"5/7"},"seed":42,)"
      R"("routes":["trace","tv_x"]})");
  CHECK(cfg.N == 2);
  CHECK(cfg.n == std::vector<int>{1});
  CHECK(cfg.q == Rational(3, 2));
  CHECK(cfg.zs.size() == 1);
  CHECK(cfg.zs[0] == Rational(5, 7));
  CHECK(cfg.seed == 42);
  REQUIRE(cfg.routes.size() == 2);
  CHECK(cfg.routes[0] == Route::trace);
  CHECK(cfg.routes[1] == Route::tv_x);
}

TEST_CASE("parse_config guards") {
  // q = 0 and q = +-1 are rejected
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"N":2,"n":[1],"q":"0","module":{"kind":"evaluation","z":"1"}})"),
      doctest::Contains("q must be nonzero, not +-1"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"N":2,"n":[1],"q":"1","module":{"kind":"evaluation","z":"1"}})"),
                  ConfigError);
  // n length mismatch
  CHECK_THROWS_AS(parse_config(R"({"N":3,"n":[1],"q":"2","module":{"kind":"evaluation","z":"1"}})"),
                  ConfigError);
  // unparseable fraction
  CHECK_THROWS_AS(
      parse_config(R"({"N":2,"n":[1],"q":"3/x","module":{"kind":"evaluation","z":"1"}})"),
      ConfigError);
  // z = 0
  CHECK_THROWS_AS(parse_config(R"({"N":2,"n":[1],"q":"2","module":{"kind":"evaluation","z":"0"}})"),
                  ConfigError);
  // unknown route
  CHECK_THROWS_AS(parse_config(R"({"N":2,"n":[1],"q":"2","module":{"kind":"evaluation","z":"1"},)"
                               R"("routes":["nope"]})"),
                  ConfigError);
  // malformed JSON
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  // ConfigError carries a JSON-pointer location
  try {
    parse_config(R"({"N":2,"n":[1],"q":"2","module":{"kind":"evaluation"}})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("/module/z") != std::string::npos);
  }
}

TEST_CASE("explicit t must match the composition") {
  CHECK_THROWS_AS(parse_config(R"({"N":2,"n":[2],"q":"2","module":{"kind":"evaluation","z":"1"},)"
                               R"("t":[["1/2"]]})"),
                  ConfigError);
  const RunConfig cfg = parse_config(R"({"N":2,"n":[2],"q":"2","module":{"kind":"evaluation","z":"1"},)"
                                     R"("t":[["1/2","1/3"]]})");
  REQUIRE(cfg.explicit_t.has_value());
  CHECK((*cfg.explicit_t)[0][1] == Rational(1, 3));
}

TEST_CASE("run_suite: routes pass and the report is thread-count independent") {
  const std::string base =
      R"({"N":2,"n":[1],"q":"3/2","module":{"kind":"evaluation","z":"5/7"},"seed":7,)"
      R"("suites":["routes"],"threads":)";
  RunConfig one = parse_config(base + "1}");
  RunConfig two = parse_config(base + "2}");
  const Report r1 = run_suite(one);
  const Report r2 = run_suite(two);
  CHECK(r1.exit_code == 0);
  CHECK(r1.verdict == "pass");
  // Byte-identical JSON apart from the echoed thread count itself.
  RunConfig one_echo = one;
  one_echo.raw_json = two.raw_json;
  CHECK(report_json(one_echo, r1) == report_json(two, r2));
}

TEST_CASE("negative control: corrupted R coefficient fails with detail") {
  RunConfig cfg = parse_config(
      R"({"N":2,"n":[1],"q":"3/2","module":{"kind":"evaluation","z":"5/7"},"seed":11,)"
      R"("suites":["ybe"],"corrupt_r":true,"threads":2})");
  const Report report = run_suite(cfg);
  CHECK(report.exit_code == 1);
  CHECK(report.verdict == "fail");
  bool saw_detail = false;
  for (const auto& rec : report.checks)
    if (rec.verdict == "fail" && rec.detail.find("first mismatch") != std::string::npos)
      saw_detail = true;
  CHECK(saw_detail);
}

TEST_CASE("compute_json reports per-route vectors and agreement") {
  const RunConfig cfg = parse_config(
      R"({"N":2,"n":[1],"q":"3/2","module":{"kind":"evaluation","z":"5/7"},"seed":3})");
  int exit_code = 9;
  const std::string out = compute_json(cfg, exit_code);
  CHECK(exit_code == 0);
  CHECK(out.find("\"agree\": true") != std::string::npos);
  CHECK(out.find("\"trace\"") != std::string::npos);
  CHECK(out.find("\"w_hat\"") != std::string::npos);
}

TEST_CASE("enumerate_json lists both admissible families") {
  const RunConfig cfg = parse_config(
      R"({"N":3,"n":[1,1],"q":"3/2","module":{"kind":"evaluation","z":"5/7"}})");
  const std::string out = enumerate_json(cfg);
  CHECK(out.find("\"s\": 2") != std::string::npos);
  CHECK(out.find("\"m\": 2") != std::string::npos);
}

TEST_CASE("tensor config builds and verifies routes") {
  const RunConfig cfg = parse_config(
      R"({"N":2,"n":[1],"q":"4/3","module":{"kind":"tensor","factors":[{"z":"2"},{"z":"7/2"}]},)"
      R"("seed":5,"suites":["routes"],"threads":2})");
  const Report report = run_suite(cfg);
  CHECK(report.exit_code == 0);
}
