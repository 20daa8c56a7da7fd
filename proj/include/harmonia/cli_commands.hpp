#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonia {

// full command-line driver. args excludes the program name.
// exit codes: 0 success, 1 i/o failure, 2 bad input or usage, 3 internal invariant failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmonia
