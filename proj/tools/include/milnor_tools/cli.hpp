#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor::tools {

// Runs one CLI invocation; `args` excludes the program name. Exit codes:
// 0 success, 1 verification failure or startup failure, 2 invalid usage,
// invalid input or an invalid move.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace milnor::tools
