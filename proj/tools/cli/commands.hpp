#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace autgroup::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kPrecondition = 3,
  kOracleMismatch = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autgroup::cli
