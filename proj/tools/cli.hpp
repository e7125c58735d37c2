#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indep::cli {

enum ExitCode : int {
    kOk = 0,
    kPropertyFailure = 1,
    kParseError = 2,
    kSizeGuard = 3,
    kInvalidTop = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indep::cli
