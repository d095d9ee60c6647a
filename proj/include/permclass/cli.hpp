#ifndef PERMCLASS_CLI_HPP
#define PERMCLASS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permclass {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,       // success, or the checked relation holds
  kExitFailed = 1,   // a check failed; the witness is printed
  kExitUsage = 2,    // bad flags, parse errors, violated preconditions
  kExitResource = 3, // an order cap was hit
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace permclass

#endif
