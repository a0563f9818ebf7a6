#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpod {

// Runs the command-line tool on the given arguments (program name excluded)
// and returns the process exit code:
//   0  success / equivalent
//   1  semantic negative (not equivalent, property failure)
//   2  usage, parse, or unsupported-construct error
//   3  enumeration cap exceeded
//   4  internal cross-check failure
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lpod
