#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpqp {

/// Runs the `mpqp` command line with args[0] as the program name.
///
/// Exit codes: 0 success, 1 validation, 2 numerical (including a failed
/// check), 3 infeasible problem or parameter outside the solution.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpqp
