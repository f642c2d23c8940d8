#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ddseq {

// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitCap = 3, kExitInvariant = 4 };

/// Runs the command-line interface. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddseq
