#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locassort::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,   // parse errors, usage errors, missing files
  kDegenerate = 3,   // well-formed input on which the quantity is undefined
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Results go to `out` unless --output redirects them;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locassort::cli
