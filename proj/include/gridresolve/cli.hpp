#pragma once

// Command-line front end. run() holds all of it so tests can drive commands
// in-process and compare stdout byte for byte.

#include <ostream>
#include <string>
#include <vector>

namespace gridresolve::cli {

enum ExitCode : int {
    kTrue = 0,
    kFalse = 1,
    kUsage = 2,
    kInputOrResource = 3,
    kConstructionFailed = 4,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridresolve::cli
