#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ct {

/// Runs one command line (without the program name). The result document
/// goes to `out`, the human summary to `err`. Returns 0 for a certified
/// result, 2 for an honest non-result, 1 for errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ct
