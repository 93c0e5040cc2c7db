#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtfa::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,          ///< success, accept, pass, equal
  kNegative = 1,    ///< reject, violated, difference found
  kUnknown = 2,     ///< budget exhausted without an answer
  kBadInput = 3,    ///< malformed input or invalid arguments
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtfa::cli
