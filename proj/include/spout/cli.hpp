// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spout {

/// Stable process exit codes.
enum ExitCode : int { exit_ok = 0, exit_domain = 1, exit_usage = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 10^(db / 10); "inf" and "-inf" map to the corresponding linear limits.
double db_to_linear(double db);

/// Parses a linear or dB quantity that may be spelled "inf".
double parse_level(const std::string& text);

}  // namespace spout
