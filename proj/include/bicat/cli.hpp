#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicat {

// Exit codes of run_command.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitPrecondition = 3 };

// Runs one command line (without the program name), writing reports to `out`
// and diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicat
