#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace overconv::cli {

/// Exit codes: 0 all executed checks pass, 1 some check failed, 2 usage or
/// configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overconv::cli
