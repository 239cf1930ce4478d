#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twsparse {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInvariant = 1, kInfeasible = 2, kIo = 3 };

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twsparse
