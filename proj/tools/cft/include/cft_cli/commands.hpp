#pragma once

#include "cft_cli/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cft::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0ffee;

/// Runs one invocation (arguments without the program name). Writes the
/// report to `out`, usage and progress to `err`, and returns the exit code:
/// 0 when every check passes, 1 for failed checks or domain errors, 2 for
/// usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cft::cli
