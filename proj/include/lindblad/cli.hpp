#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lindblad::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kToleranceBreach = 2, kInternal = 3 };

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out names a file, diagnostics to `err`. Output files are
/// written only after the computation succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lindblad::cli
