#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicmcm {

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 usage error. `in` backs the file argument "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cubicmcm
