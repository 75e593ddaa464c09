#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qring {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed,
/// 2 usage, IO, parse or validation error.
enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// normal output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qring
