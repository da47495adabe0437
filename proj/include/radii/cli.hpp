#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radii {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNoRoot = 3,
};

/// Runs the `radii` command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radii
