#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cxorder::cli {

/// Exit codes shared by every command.
enum Exit : int {
    Holds = 0,
    Fails = 1,
    Usage = 2,
    Inconclusive = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cxorder::cli
