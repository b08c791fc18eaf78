#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fockcb::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kUnsupportedRegime = 3,
    kInvariantViolation = 4,
};

// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockcb::cli
