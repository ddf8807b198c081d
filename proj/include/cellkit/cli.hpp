// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 cache corruption (with --strict-cache).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellkit {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellkit
