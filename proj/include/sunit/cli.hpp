#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sunit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitNoAnswer = 2,  // inapplicable, or no witness within the bounds
  kExitInput = 3,
  kExitResource = 4,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sunit
