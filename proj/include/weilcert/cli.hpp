#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weilcert {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNoPell = 3,
  kExitMismatch = 4,
  kExitInconclusive = 5,
};

/// Runs one command line (args exclude the program name) and returns the exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weilcert
