#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dfca::cli {

enum ExitCode : int {
  kHolds = 0,        ///< success, or the queried statement holds
  kDoesNotHold = 1,  ///< the queried statement does not hold
  kUsageError = 2,   ///< bad arguments, unreadable or malformed input
  kValidityError = 3 ///< knowledge base not Delta-valid, or a capacity cap hit
};

struct CliResult {
  int exit_code = kHolds;
  /// Human-readable report.
  std::string text;
  /// Structured report, one document per command; filled when --json is given.
  std::optional<nlohmann::json> document;
};

/// Runs one command line (without the program name). Never throws; every
/// failure is reported through the exit code and text.
CliResult run(const std::vector<std::string>& args);

}  // namespace dfca::cli
