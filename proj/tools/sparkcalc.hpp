#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparkcalc {

enum ExitCode : int {
  kPass = 0,
  kParseError = 2,
  kDisagreement = 3,
  kInvalidDegrees = 4,
};

/// Runs the command line (args excludes the program name), writing the report
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparkcalc
