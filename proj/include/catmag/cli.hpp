#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catmag::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNegative = 2,  // no magnitude, singular zeta, no (co)weighting, failed Penrose check
};

/// Runs one invocation; `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catmag::cli
