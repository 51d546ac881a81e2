#pragma once

#include <iosfwd>

namespace rsdl::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kPass = 0, kVerifyFailed = 1, kParseError = 2, kBudget = 3 };

/// Runs one command line. Reports go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsdl::cli
