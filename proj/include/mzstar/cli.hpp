#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mzstar {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitUnsupported = 3,
  kExitMismatch = 4,
  kExitNumeric = 5,
};

/// Entry point of the `mzstar` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzstar
