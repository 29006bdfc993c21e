#ifndef GRASSMANN_CLI_HPP
#define GRASSMANN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace grassmann {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the tool on `args` (without the program name). Documents named "-"
/// are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace grassmann

#endif  // GRASSMANN_CLI_HPP
