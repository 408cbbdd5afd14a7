#pragma once

#include <ostream>

namespace gammalab {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  /// Computation mismatch, resource limit or internal failure.
  kExitComputation = 1,
  /// Bad usage or unparsable input.
  kExitUsage = 2,
};

/// Runs the `gammalab` command line with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gammalab
