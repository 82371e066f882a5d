#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metrize::cli {

/// Exit codes of the `metrize` tool.
enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,  // not metrizable, not multipartite, validation failed
  kUsage = 2,     // bad arguments or unreadable / malformed input
};

/// Runs the tool on argv (without the program name). Machine-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace metrize::cli
