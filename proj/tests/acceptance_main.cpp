// Acceptance harness: runs the verification suites at their pinned
// tolerances and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hsub/report.hpp"
#include "hsub/suites.hpp"

using namespace hsub;

namespace {

std::vector<CheckReport> g_reports;

void run_into(const std::string& suite, int n, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  auto rs = run_suite(suite, cfg);
  g_reports.insert(g_reports.end(), rs.begin(), rs.end());
}

struct Selection {
  int total = 0;
  int passed = 0;
  double max_residual = 0.0;
  double runtime_s = 0.0;
  bool all_exactly_zero = true;
};

Selection select(const std::string& suite, const std::set<std::string>& names) {
  Selection s;
  for (auto& r : g_reports) {
    if (r.suite != suite) continue;
    if (!names.empty() && !names.count(r.check_name)) continue;
    ++s.total;
    if (r.pass) ++s.passed;
    s.max_residual = std::max(s.max_residual, r.residual);
    s.runtime_s += r.runtime_ms / 1000.0;
    if (r.residual != 0.0) s.all_exactly_zero = false;
  }
  return s;
}

int g_failures = 0;

void report_criterion(int id, const std::string& title, bool ok, const Selection& s,
                      double limit_s, const std::string& extra = "") {
  bool time_ok = s.runtime_s <= limit_s;
  bool pass = ok && time_ok && s.total > 0;
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %2d: %-46s  checks %d/%d  max residual %.3g  %.1fs/%.0fs%s%s\n",
              pass ? "PASS" : "FAIL", id, title.c_str(), s.passed, s.total, s.max_residual,
              s.runtime_s, limit_s, extra.empty() ? "" : "  ", extra.c_str());
}

}  // namespace

int main() {
  const std::uint64_t seed = 20240817;

  run_into("algebra", 3, seed);
  run_into("lemmas", 2, seed);
  run_into("planewaves", 1, seed);
  run_into("planewaves", 2, seed + 1);
  run_into("kernel", 2, seed);
  run_into("thm41", 2, seed);
  run_into("stokes", 1, seed);
  run_into("cauchy-ball", 1, seed);
  run_into("cauchy-cylinder", 1, seed);

  // 1. exact algebra identities
  {
    Selection all = select("algebra", {});
    Selection exact = select("algebra", {"generator-anticommutation", "grassmann-identities",
                                         "duality-identities", "conj-antihomomorphism",
                                         "dual-expression-identity"});
    Selection merged = all;
    merged.all_exactly_zero = exact.all_exactly_zero;
    report_criterion(1, "algebra identities, exact mode, n <= 3",
                     all.passed == all.total && exact.all_exactly_zero, merged, 5.0,
                     exact.all_exactly_zero ? "identity residuals exactly 0" : "nonzero residual");
  }

  // 2. special-integral closed forms
  {
    Selection s = select("lemmas", {});
    report_criterion(2, "special integrals vs quadrature oracles", s.passed == s.total, s, 30.0);
  }

  // 3. Funk-Hecke reduction
  {
    Selection s = select("thm41", {"funk-hecke"});
    report_criterion(3, "zonal sphere integrals reduce to 1-d form", s.passed == s.total, s, 30.0);
  }

  // 4. closed kernel integrals vs direct integration
  {
    Selection s = select("thm41", {"pw-moment-closed-vs-quadrature", "pw-moment-odd-vanishes",
                                   "pw-moment-sum-identity"});
    report_criterion(4, "plane-wave moment closed forms (n = 1, 2)", s.passed == s.total, s, 300.0);
  }

  // 5. kernel differential equations
  {
    Selection e = select("kernel", {"cauchy-kernel-dirac-left", "cauchy-kernel-dirac-right",
                                    "cauchy-kernel-convergence-order", "gh-dx0-relations",
                                    "gh-n1-combination-identity"});
    Selection p = select("planewaves", {"pw-P-dirac-left", "pw-P-dirac-right",
                                        "pw-P-convergence-order",
                                        "pw-P-convergence-order-central2"});
    Selection merged = e;
    merged.total += p.total;
    merged.passed += p.passed;
    merged.max_residual = std::max(merged.max_residual, p.max_residual);
    merged.runtime_s += p.runtime_s;
    report_criterion(5, "kernel equations with 4th-order convergence",
                     merged.passed == merged.total, merged, 60.0);
  }

  // 6. derivative-kernel consistency
  {
    Selection s = select("kernel", {"derivative-kernel-matches-fd",
                                    "kernel-from-derivative-integral"});
    report_criterion(6, "derivative kernel and its radial integral", s.passed == s.total, s, 60.0);
  }

  // 7. divergence pairing
  {
    Selection s = select("stokes", {});
    report_criterion(7, "boundary/volume pairing on the unit ball", s.passed == s.total, s, 120.0);
  }

  // 8. ball reconstruction
  {
    Selection s = select("cauchy-ball", {});
    report_criterion(8, "boundary representation of d/dx0 F", s.passed == s.total, s, 180.0);
  }

  // 9. cylinder reconstruction
  {
    Selection s = select("cauchy-cylinder", {});
    report_criterion(9, "cylinder reconstruction with tail control", s.passed == s.total, s, 300.0);
  }

  // 10. classical plane-wave representation
  {
    Selection s = select("kernel", {"classical-kernel-plane-wave-rep"});
    report_criterion(10, "classical kernel plane-wave representation", s.passed == s.total, s, 60.0);
  }

  // 11. byte-identical reports for a fixed seed
  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteConfig cfg;
    cfg.n = 1;
    cfg.seed = 777;
    std::string a = emit_json_lines(run_suite("all", cfg));
    std::string b = emit_json_lines(run_suite("all", cfg));
    Selection s;
    s.total = 1;
    s.passed = (a == b && !a.empty()) ? 1 : 0;
    s.max_residual = 0.0;
    s.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_criterion(11, "byte-identical reports for a fixed seed", s.passed == 1, s, 900.0);
  }

  std::printf("%s: %d/11 criteria passed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              11 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
