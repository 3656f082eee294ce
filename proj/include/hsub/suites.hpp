#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsub/report.hpp"

namespace hsub {

/// Suite names accepted by run_suite, in execution order ("all" runs
/// every one of them).
const std::vector<std::string>& suite_names();

bool is_valid_suite(const std::string& name);

/// Declared check names per suite; every check is registered under
/// exactly one suite.
const std::map<std::string, std::vector<std::string>>& registered_checks();

/// Executes one suite (or all of them) under the given configuration.
/// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace hsub
