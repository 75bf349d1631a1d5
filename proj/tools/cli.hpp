#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wicks::cli {

// Runs one `wicks` command. Exit codes: 0 success, 1 failed verification or
// no solution, 2 usage or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wicks::cli
