#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mmagg {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitParse = 2,
    kExitIncompatible = 3,
    kExitTooLarge = 4,
};

/// Entry point of the `mmagg` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmagg
