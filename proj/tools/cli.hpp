#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chronos {

// Runs the command line tool with argv-style arguments (args[0] is the
// program name). Returns the process exit code: 0 success, 2 input error,
// 3 no feasible algorithm, 4 invalid statistical parameters.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chronos
