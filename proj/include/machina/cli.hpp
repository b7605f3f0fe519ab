#ifndef MACHINA_CLI_HPP
#define MACHINA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace machina::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,         // success, or the checked law holds
  kViolated = 1,   // a law is violated or a report is FAILURE
  kUsage = 2,      // usage, parse, or validation error
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace machina::cli

#endif  // MACHINA_CLI_HPP
