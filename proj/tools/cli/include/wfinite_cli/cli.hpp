#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfinite::cli {

// Runs the tool on `args` (without the program name) and returns the exit
// code: 0 success, 2 usage or domain error, 3 input data error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfinite::cli
