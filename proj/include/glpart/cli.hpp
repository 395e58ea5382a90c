#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glp {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,        // verification or solve failure, oracle discrepancy
  kExitPrecondition = 2,  // input violates a solver precondition
  kExitIo = 3,            // unreadable file, malformed input, bad flags
};

// Runs the tool on `args` (without the program name). JSON goes to `out`
// unless --out is given; diagnostics and human summaries go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glp
