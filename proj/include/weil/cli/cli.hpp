#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weil::cli {

enum ExitCode : int {
  kHolds = 0,         // holds, equality-candidate, plain success
  kNotApplicable = 1, // violated hypotheses, not applicable
  kUndecided = 2,
  kError = 3,
  kCounterexample = 4, // certified violation of the inequality
  kUsage = 64,
  kDataError = 65,
};

/// Runs one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weil::cli
