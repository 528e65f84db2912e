#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swan {

/* CLI dispatch, separated from main() so tests can drive it in-process.
 * Exit codes: 0 success, 2 input error, 3 internal invariant failure. */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace swan
