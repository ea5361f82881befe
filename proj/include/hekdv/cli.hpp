#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hekdv/report.hpp"

namespace hekdv::cli {

inline constexpr const char* kVersion = "0.1.0";

/// verify suites, in the order they are listed by `verify all`.
const std::vector<std::string>& suite_names();

/// Runs every check of a suite, independent checks concurrently; reports come
/// back in a fixed order. Throws ConfigError for an unknown suite.
std::vector<VerifyReport> run_suite(const std::string& suite);

/// {version, checks: [{id, paper_anchor, status, residual_summary, millis}], overall}.
/// Throws MalformedInput for an empty list.
nlohmann::json emit_report(const std::vector<VerifyReport>& reports);

/// Command-line entry point. Returns 0 when everything requested passed, 1 on
/// any failure, 2 on usage, configuration or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hekdv::cli
