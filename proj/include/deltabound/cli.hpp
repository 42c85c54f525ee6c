#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltabound::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kSolverError = 3,
};

// args[0] is the program name. Input JSON is read from --input, or from `in`
// when the path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace deltabound::cli
