#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uqsl {

/// Command-line dispatch. Exit codes: 0 success, 1 validation error,
/// 2 mathematical consistency failure, 3 I/O error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace uqsl
