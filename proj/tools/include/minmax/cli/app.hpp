#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minmax::cli {

/// Exit codes. Solver verdicts map to Ok/Negative, everything that stops a
/// command from producing a verdict maps to InputError.
enum ExitCode : int { Ok = 0, Negative = 1, InputError = 2 };

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minmax::cli
