#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knots {

// Command-line front end. Exit status 0 on success, 1 on domain errors
// (structured error record), 2 on usage errors. Factored out of main() so the
// test suite can drive it directly.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace knots
