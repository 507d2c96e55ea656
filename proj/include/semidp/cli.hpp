#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semidp {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitInput = 2;

// Subcommands: solve, check-semiring, check-tree, fixtures run, fixtures export.
// args excludes the program name. Documents go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semidp
