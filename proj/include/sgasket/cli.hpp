#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgasket::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kDomainFailure = 1,  // property violation, SamePoint, NotAJunction
  kUsageError = 2,     // bad flags or malformed code
  kIoError = 3,
};

/// Runs one command line (without the program name). All output goes to
/// `out` / `err`; nothing touches the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgasket::cli
