#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bft {

/// Runs one command (construct, analyze, solve, table1, netlist, verify).
/// Returns 0 on success, 1 on validation errors, 2 when a verification
/// check fails with a counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bft
