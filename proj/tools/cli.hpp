#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsurf::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kUnsupportedWord = 2,
  kVerificationFailure = 3,
  kInvalidFlags = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsurf::cli
