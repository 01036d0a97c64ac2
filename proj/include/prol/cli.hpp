#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prol {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInconclusive = 3 };

/// Runs one command line (without the program name), writing the report to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prol
