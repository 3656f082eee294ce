#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hsub {

/// Result of one verification check. pass is residual <= tolerance.
struct CheckReport {
  std::string suite;
  std::string check_name;
  std::map<std::string, std::string> params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
  std::optional<double> error_estimate;
  std::string note;  // human-format description
};

/// Configuration shared by all suites; the seed fully determines every
/// sampled input.
struct SuiteConfig {
  int n = 2;
  std::uint64_t seed = 12345;
  double tol_scale = 1.0;
  int mc_samples = 20000;
};

/// Stable value formatting used in params and reports.
std::string format_double(double v);

/// Serializations; reports are sorted by (suite, check_name, params).
/// json-lines and csv leave runtime_ms empty so that equal
/// configurations produce byte-identical files.
std::string emit_json_lines(std::vector<CheckReport> reports);
std::string emit_csv(std::vector<CheckReport> reports);
std::string emit_human(std::vector<CheckReport> reports);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace hsub
