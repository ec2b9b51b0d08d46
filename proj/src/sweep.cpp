// SPDX-License-Identifier: Apache-2.0
#include "spout/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "spout/error.hpp"

namespace spout {

namespace {

double parse_double(const std::string& field, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw DomainError(std::string("cannot parse ") + what + " from \"" + field + "\"");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

}  // namespace

std::string format_exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << sweep_csv_header << '\n';
  for (const SweepRecord& r : records) {
    out << format_exact(r.x) << ',' << format_exact(r.epsilon_bpp) << ','
        << format_exact(r.epsilon_ppp) << ',' << format_exact(r.coverage_bpp) << ','
        << format_exact(r.coverage_ppp) << ',';
    if (r.mc_mean) out << format_exact(*r.mc_mean);
    out << ',';
    if (r.mc_stderr) out << format_exact(*r.mc_stderr);
    out << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != sweep_csv_header) {
    throw DomainError("sweep CSV is missing its header row");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 7) throw DomainError("sweep CSV row needs 7 fields: " + line);
    SweepRecord r;
    r.x = parse_double(f[0], "x");
    r.epsilon_bpp = parse_double(f[1], "epsilon_bpp");
    r.epsilon_ppp = parse_double(f[2], "epsilon_ppp");
    r.coverage_bpp = parse_double(f[3], "coverage_bpp");
    r.coverage_ppp = parse_double(f[4], "coverage_ppp");
    if (!f[5].empty()) r.mc_mean = parse_double(f[5], "mc_mean");
    if (!f[6].empty()) r.mc_stderr = parse_double(f[6], "mc_stderr");
    records.push_back(r);
  }
  return records;
}

nlohmann::json sweep_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    nlohmann::json row = {{"x", r.x},
                          {"epsilon_bpp", r.epsilon_bpp},
                          {"epsilon_ppp", r.epsilon_ppp},
                          {"coverage_bpp", r.coverage_bpp},
                          {"coverage_ppp", r.coverage_ppp}};
    if (r.mc_mean) row["mc_mean"] = *r.mc_mean;
    if (r.mc_stderr) row["mc_stderr"] = *r.mc_stderr;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> parse_range(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() != 3) throw DomainError("range must look like start:stop:step");
  const double start = parse_double(parts[0], "range start");
  const double stop = parse_double(parts[1], "range stop");
  const double step = parse_double(parts[2], "range step");
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(stop)) {
    throw DomainError("range needs step > 0 and stop >= start");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> xs;
  xs.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) xs.push_back(start + static_cast<double>(i) * step);
  return xs;
}

}  // namespace spout
