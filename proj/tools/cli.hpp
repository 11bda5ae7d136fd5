#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace charvar::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kInvalidRepresentation = 3,
    kPrecondition = 4,
};

/// Runs the `charvar` command line on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charvar::cli
