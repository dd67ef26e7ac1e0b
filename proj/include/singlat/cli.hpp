#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singlat {

/// Runs the command line `args` (args[0] is the program name). Returns 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace singlat
