#pragma once

#include <ostream>

namespace orderdim::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kViolation = 2,
  kBudget = 3,
};

/// Runs the command line front end. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orderdim::cli
