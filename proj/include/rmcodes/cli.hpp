#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmcodes {

/// Runs the command-line tool in-process. args excludes the program name.
/// Exit codes: 0 success, 1 verification or construction failure, 2 usage or
/// malformed input, 3 uncorrectable received word.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmcodes
