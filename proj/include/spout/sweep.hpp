// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spout {

/// One point of an intensity (lambda) or interferer-count (M) sweep.
struct SweepRecord {
  double x = 0.0;
  double epsilon_bpp = 0.0;
  double epsilon_ppp = 0.0;
  double coverage_bpp = 1.0;
  double coverage_ppp = 1.0;
  std::optional<double> mc_mean;
  std::optional<double> mc_stderr;

  bool operator==(const SweepRecord&) const = default;
};

inline constexpr const char* sweep_csv_header =
    "x,epsilon_bpp,epsilon_ppp,coverage_bpp,coverage_ppp,mc_mean,mc_stderr";

/// Writes a header row plus one row per record, 17 significant digits,
/// empty fields for absent Monte-Carlo columns.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

nlohmann::json sweep_to_json(const std::vector<SweepRecord>& records);

/// Parses "start:stop:step" into the inclusive grid start + i * step.
std::vector<double> parse_range(const std::string& spec);

/// Formats a double with 17 significant digits.
std::string format_exact(double v);

}  // namespace spout
