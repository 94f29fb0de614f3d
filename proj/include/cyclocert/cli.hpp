#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclocert {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailed = 1,
  kExitMalformed = 2,
};

/// Entry point of the cyclocert command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cyclocert
