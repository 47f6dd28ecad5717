#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plie::cli {

enum ExitCode : int {
  kSatisfied = 0,
  kViolated = 1,
  kInvalidInput = 2,
  kNecessaryOnly = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plie::cli
