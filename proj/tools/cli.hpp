#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binclass::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kMismatch = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binclass::cli
