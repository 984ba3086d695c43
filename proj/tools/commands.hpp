#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hedonic::cli {

/// Parses and runs one CLI invocation (argv without the program name),
/// writing reports to the given streams. Exit codes: 0 success, 1 unstable
/// check / reproduction failure, 2 input error, 3 dynamics round limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hedonic::cli
