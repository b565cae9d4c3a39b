#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace om {

/// Runs the command-line tool on `args` (program name excluded). Returns the
/// exit status: 0 all checks pass, 1 a check failed, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace om
