#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcstar {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcstar
