#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fideal::cli {

/// Exit codes: 0 yes, 3 no, 2 bad input, 4 budget exceeded.
enum Exit : int { yes = 0, input_error = 2, no = 3, budget = 4 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fideal::cli
