// Command-line front end; `run` is what the executable calls.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcalg::cli {

// args excludes the program name. Exit codes: 0 pass, 1 violations, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcalg::cli
