#include "hsub/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hsub {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string params_key(const CheckReport& r) {
  std::string k;
  for (auto& [a, b] : r.params) {
    k += a;
    k += '=';
    k += b;
    k += ';';
  }
  return k;
}

void sort_reports(std::vector<CheckReport>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    if (a.check_name != b.check_name) return a.check_name < b.check_name;
    return params_key(a) < params_key(b);
  });
}

}  // namespace

std::string emit_json_lines(std::vector<CheckReport> reports) {
  sort_reports(reports);
  std::ostringstream os;
  for (auto& r : reports) {
    nlohmann::json j;
    j["check"] = r.check_name;
    j["suite"] = r.suite;
    nlohmann::json p = nlohmann::json::object();
    for (auto& [a, b] : r.params) p[a] = b;
    j["params"] = p;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    // wall-clock time is not reproducible; json-lines keeps the key
    // with a null value so identical configurations diff clean
    j["runtime_ms"] = nullptr;
    if (r.error_estimate)
      j["error_estimate"] = *r.error_estimate;
    else
      j["error_estimate"] = nullptr;
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string emit_csv(std::vector<CheckReport> reports) {
  sort_reports(reports);
  std::ostringstream os;
  os << "suite,check,params,residual,tolerance,pass,runtime_ms,error_estimate\n";
  for (auto& r : reports) {
    os << r.suite << ',' << r.check_name << ',' << '"' << params_key(r) << '"' << ','
       << format_double(r.residual) << ',' << format_double(r.tolerance) << ','
       << (r.pass ? "true" : "false") << ',' << ','
       << (r.error_estimate ? format_double(*r.error_estimate) : "") << '\n';
  }
  return os.str();
}

std::string emit_human(std::vector<CheckReport> reports) {
  sort_reports(reports);
  std::ostringstream os;
  int npass = 0;
  for (auto& r : reports) {
    npass += r.pass ? 1 : 0;
    char line[512];
    std::snprintf(line, sizeof line, "[%s] %-12s %-42s residual %-12.4g tol %-10.3g (%.1f ms)",
                  r.pass ? "PASS" : "FAIL", r.suite.c_str(), r.check_name.c_str(), r.residual,
                  r.tolerance, r.runtime_ms);
    os << line;
    if (!r.params.empty()) {
      os << "  {";
      bool first = true;
      for (auto& [a, b] : r.params) {
        if (!first) os << ", ";
        first = false;
        os << a << '=' << b;
      }
      os << '}';
    }
    if (r.error_estimate) os << "  est " << format_double(*r.error_estimate);
    if (!r.note.empty()) os << "\n       " << r.note;
    os << '\n';
  }
  os << npass << '/' << reports.size() << " checks passed\n";
  return os.str();
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace hsub
