#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arithgraph::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kBudget = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arithgraph::cli
