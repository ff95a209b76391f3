#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vabs {

// Runs one command line (without the program name). Returns the process
// exit code: 0 success, 1 bad input or usage, 2 internal failure.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vabs
