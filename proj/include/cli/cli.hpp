#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kegel_cli {

/// Exit statuses shared by every subcommand.
enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kegel_cli
