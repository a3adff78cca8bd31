#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alexinv::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,  // b1 = 0, a violated check, or another failed precondition
  kUsage = 2,    // bad arguments or unparsable input
  kResource = 3, // a size limit such as --max-index was hit
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexinv::cli
