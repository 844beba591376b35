#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starprod::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starprod::cli
