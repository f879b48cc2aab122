#pragma once

// The fanoquot command line: table, detect-l3, check-deformation,
// fingerprint and validate-catalog. Kept in a library so tests can run
// commands in-process.

#include <ostream>
#include <string>
#include <vector>

namespace fanoquot {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitValidation = 4,
  kExitData = 5,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fanoquot
