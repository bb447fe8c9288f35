#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibkit {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out names a file; diagnostics and usage go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibkit
