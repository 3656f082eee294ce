#include <set>
#include <stdexcept>

#include "doctest.h"
#include "hsub/report.hpp"
#include "hsub/suites.hpp"

using namespace hsub;

namespace {

CheckReport mk(const std::string& suite, const std::string& name, double res, double tol) {
  CheckReport r;
  r.suite = suite;
  r.check_name = name;
  r.residual = res;
  r.tolerance = tol;
  r.pass = res <= tol;
  r.runtime_ms = 1.25;
  return r;
}

}  // namespace

TEST_CASE("json lines: schema keys, ordering, stability") {
  std::vector<CheckReport> rs;
  rs.push_back(mk("b-suite", "z-check", 0.1, 1.0));
  rs.push_back(mk("a-suite", "m-check", 2.0, 1.0));
  rs.push_back(mk("a-suite", "a-check", 0.0, 0.0));
  std::string a = emit_json_lines(rs);
  std::string b = emit_json_lines(rs);
  CHECK(a == b);
  // sorted by (suite, check)
  CHECK(a.find("a-check") < a.find("m-check"));
  CHECK(a.find("m-check") < a.find("z-check"));
  // schema keys present, runtime never serialized as a number
  CHECK(a.find("\"check\"") != std::string::npos);
  CHECK(a.find("\"params\"") != std::string::npos);
  CHECK(a.find("\"residual\"") != std::string::npos);
  CHECK(a.find("\"tolerance\"") != std::string::npos);
  CHECK(a.find("\"pass\"") != std::string::npos);
  CHECK(a.find("\"runtime_ms\":null") != std::string::npos);
  CHECK(a.find("\"error_estimate\"") != std::string::npos);
  CHECK(a.find("1.25") == std::string::npos);
}

TEST_CASE("empty report serializes to empty output") {
  CHECK(emit_json_lines({}).empty());
  CHECK(all_pass({}));
}

TEST_CASE("failing checks flip the aggregate") {
  std::vector<CheckReport> rs{mk("s", "good", 0.0, 1.0), mk("s", "bad", 2.0, 1.0)};
  CHECK_FALSE(all_pass(rs));
  std::string h = emit_human(rs);
  CHECK(h.find("[FAIL]") != std::string::npos);
  std::string c = emit_csv(rs);
  CHECK(c.find("false") != std::string::npos);
}

TEST_CASE("every check is registered under exactly one suite") {
  std::set<std::string> seen;
  std::size_t total = 0;
  for (auto& [suite, checks] : registered_checks()) {
    CHECK(!checks.empty());
    for (auto& name : checks) {
      CHECK(seen.insert(name).second);  // no duplicates across suites
      ++total;
    }
  }
  CHECK(total == seen.size());
  CHECK(is_valid_suite("all"));
  CHECK(is_valid_suite("thm41"));
  CHECK_FALSE(is_valid_suite("bogus"));
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
  SuiteConfig cfg;
  cfg.n = 1;
  cfg.seed = 99;
  auto a = run_suite("lemmas", cfg);
  auto b = run_suite("lemmas", cfg);
  CHECK(emit_json_lines(a) == emit_json_lines(b));
  CHECK(all_pass(a));
}

TEST_CASE("unknown suite raises") {
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);
}
