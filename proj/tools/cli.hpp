#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twa::cli {

/// Exit codes of the `twa` tool.
enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs the tool on `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twa::cli
