#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kComputationError = 2,
  kVerificationFailure = 3,
};

/// Runs one command line (without the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fracspec::cli
