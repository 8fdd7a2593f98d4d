#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pivotkit {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command. args excludes the program name. A file argument of "-"
/// reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pivotkit
