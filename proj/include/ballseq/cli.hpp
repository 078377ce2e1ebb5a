#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ballseq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ballseq::cli
