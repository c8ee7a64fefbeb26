#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ybsys {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotSolution = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybsys
