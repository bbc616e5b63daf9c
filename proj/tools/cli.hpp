#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wmesc::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

/// Runs the `wmesc` command line on `args` (without the program name),
/// writing results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmesc::cli
