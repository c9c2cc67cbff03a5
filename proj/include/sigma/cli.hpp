#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sigma::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2, kBudgetRefused = 3 };

/// Parses "a..b" inclusive ranges and comma lists, e.g. "2,4..6" -> {2,4,5,6}.
/// Throws InvalidArgument on malformed or empty input.
std::vector<std::int64_t> parse_range(std::string_view text);

/// Runs the command line (args excludes the program name) and returns the
/// process exit code. Documents go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigma::cli
