#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,      // bad arguments or I/O failure
  kVerifyFailure = 2,   // authentication or vector verification failed
};

/// Runs the `pbc` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pbc::cli
