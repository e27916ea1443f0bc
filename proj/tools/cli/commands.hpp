#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmcalc::app {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

// Runs the tool on the given arguments (without the program name), writing
// results to `out` and diagnostics to `err`.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fmcalc::app
