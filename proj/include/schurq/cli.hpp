#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurq {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace schurq
