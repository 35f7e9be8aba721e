#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace critpoly::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  // a proven inequality failed: implementation bug
    kExitUsage = 2,      // bad flags, unreadable or invalid input
};

/// Entry point of the `critpoly` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critpoly::cli
