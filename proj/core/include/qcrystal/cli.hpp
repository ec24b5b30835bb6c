#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace qcrystal {

// Entry point behind the command-line binary, separated so tests can drive
// it with captured streams.  args excludes the program name.  Returns the
// process exit code: 0 success / identity holds, 1 identity fails, 2 usage
// error or unknown id.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace qcrystal
