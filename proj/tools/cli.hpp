#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankmatch::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kParseError = 2,
  kHypothesisViolation = 3,
  kBadInvocation = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankmatch::cli
