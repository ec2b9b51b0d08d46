// SPDX-License-Identifier: Apache-2.0
#include "spout/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spout/error.hpp"
#include "spout/geometry.hpp"
#include "spout/montecarlo.hpp"
#include "spout/outage.hpp"
#include "spout/region_io.hpp"
#include "spout/sweep.hpp"

namespace spout {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChannelOptions {
  double alpha = 3.2;
  std::string beta_db;
  std::string beta;
  std::string snr_db;
  std::string snr;
  double p = 1.0;

  ChannelParams resolve() const {
    if (!beta_db.empty() && !beta.empty()) throw UsageError("give either --beta-db or --beta");
    if (!snr_db.empty() && !snr.empty()) throw UsageError("give either --snr-db or --snr");
    ChannelParams params;
    params.alpha = alpha;
    params.p = p;
    params.beta = !beta.empty() ? parse_level(beta)
                  : !beta_db.empty() ? db_to_linear(parse_level(beta_db))
                                     : 1.0;
    params.snr = !snr.empty() ? parse_level(snr)
                 : !snr_db.empty() ? db_to_linear(parse_level(snr_db))
                                   : 10.0;
    params.validate();
    return params;
  }
};

void add_channel_options(CLI::App& cmd, ChannelOptions& opts) {
  cmd.add_option("--alpha", opts.alpha, "Path-loss exponent (> 2)")->capture_default_str();
  cmd.add_option("--beta-db", opts.beta_db, "SINR threshold in dB [default 0]");
  cmd.add_option("--beta", opts.beta, "SINR threshold, linear");
  cmd.add_option("--snr-db", opts.snr_db, "Average SNR in dB, or inf [default 10]");
  cmd.add_option("--snr", opts.snr, "Average SNR, linear, or inf");
  cmd.add_option("--p", opts.p, "Interferer activity probability")->capture_default_str();
}

struct MethodOptions {
  std::string method = "auto";
  std::size_t grid_points = 125'000;
  double samples = 1e6;
  std::uint64_t seed = 1;

  Method resolve(const Region& region) const {
    if (method == "auto") {
      return region.kind() == RegionKind::multipolygon ? Method::grid(grid_points)
                                                       : Method::closed();
    }
    if (method == "closed") return Method::closed();
    if (method == "quadrature") return Method::quadrature();
    if (method == "grid") return Method::grid(grid_points);
    return Method::sample(static_cast<std::size_t>(samples), seed);
  }
};

void add_method_options(CLI::App& cmd, MethodOptions& opts) {
  cmd.add_option("--method", opts.method, "Interference-factor method")
      ->check(CLI::IsMember({"auto", "closed", "quadrature", "grid", "sample"}))
      ->capture_default_str();
  cmd.add_option("--grid-points", opts.grid_points, "Target lattice size for --method grid")
      ->capture_default_str();
  cmd.add_option("--samples", opts.samples, "Sample count for --method sample")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
}

std::size_t to_count(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e15) {
    throw UsageError(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

json diagnostics_json(const Diagnostics& d) {
  return {{"series_terms", d.series_terms},
          {"quad_error", d.quad_error},
          {"samples", d.samples},
          {"std_error", d.std_error}};
}

json result_json(const char* model, const OutageResult& r) {
  return {{"model", model},
          {"epsilon", r.epsilon},
          {"coverage", r.coverage},
          {"method", to_string(r.method)},
          {"diagnostics", diagnostics_json(r.diagnostics)}};
}

json params_json(const ChannelParams& params) {
  json j = {{"alpha", params.alpha}, {"beta", params.beta}, {"p", params.p}};
  j["snr"] = std::isinf(params.snr) ? json("inf") : json(params.snr);
  return j;
}

}  // namespace

double db_to_linear(double db) {
  if (std::isinf(db)) return db > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  return std::pow(10.0, db / 10.0);
}

double parse_level(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  if (lower == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: \"" + text + "\"");
  }
  if (used != text.size()) throw UsageError("not a number: \"" + text + "\"");
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatially averaged outage probability under Rayleigh fading", "spout"};
  app.require_subcommand(1);

  ChannelOptions channel;
  MethodOptions method;
  std::string region_file;
  std::size_t interferers = 0;
  double lambda = 0.0;
  bool as_json = false;
  unsigned threads = 0;

  // outage {bpp|ppp|plane}
  CLI::App* outage = app.add_subcommand("outage", "Closed-form or numerical outage probability");
  outage->require_subcommand(1);
  CLI::App* bpp = outage->add_subcommand("bpp", "Fixed number of interferers (binomial process)");
  CLI::App* ppp = outage->add_subcommand("ppp", "Poisson interferers over a region");
  CLI::App* plane = outage->add_subcommand("plane", "Poisson interferers over the whole plane");
  for (CLI::App* cmd : {bpp, ppp, plane}) add_channel_options(*cmd, channel);
  for (CLI::App* cmd : {bpp, ppp}) {
    cmd->add_option("--region", region_file, "Region JSON file")->required();
    add_method_options(*cmd, method);
  }
  bpp->add_option("--m", interferers, "Number of interferers")->required();
  for (CLI::App* cmd : {ppp, plane}) {
    cmd->add_option("--lambda", lambda, "Interferer intensity per unit area")
        ->required()
        ->check(CLI::NonNegativeNumber);
  }

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate BPP and PPP outage over lambda or M");
  std::string range;
  std::string over = "lambda";
  double simulate_trials = 0.0;
  add_channel_options(*sweep, channel);
  add_method_options(*sweep, method);
  sweep->add_option("--region", region_file, "Region JSON file")->required();
  sweep->add_option("--range", range, "start:stop:step")->required();
  sweep->add_option("--over", over, "Sweep variable")
      ->check(CLI::IsMember({"lambda", "m"}))
      ->capture_default_str();
  sweep->add_option("--simulate", simulate_trials,
                    "Monte-Carlo trials per row (PPP rows for lambda, BPP rows for m)");
  sweep->add_option("--threads", threads, "Simulation worker threads (0 = all cores)");
  sweep->add_flag("--json", as_json, "Emit JSON instead of CSV");

  // simulate
  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo network simulation");
  double trials = 1e6;
  add_channel_options(*simulate, channel);
  simulate->add_option("--region", region_file, "Region JSON file")->required();
  CLI::Option* m_opt = simulate->add_option("--m", interferers, "Fixed number of interferers");
  CLI::Option* l_opt = simulate->add_option("--lambda", lambda, "Poisson intensity")
                           ->check(CLI::NonNegativeNumber);
  m_opt->excludes(l_opt);
  simulate->add_option("--trials", trials, "Number of trials")->capture_default_str();
  simulate->add_option("--seed", method.seed, "Random seed")->capture_default_str();
  simulate->add_option("--threads", threads, "Worker threads (0 = all cores)");
  simulate->add_flag("--json", as_json, "Emit JSON (the default format)");

  // region info
  CLI::App* region_cmd = app.add_subcommand("region", "Region utilities");
  region_cmd->require_subcommand(1);
  CLI::App* info = region_cmd->add_subcommand("info", "Area, break radius, bounds, pdf support");
  double target_area = 0.0;
  info->add_option("--region", region_file, "Region JSON file")->required();
  info->add_option("--area", target_area, "Rescale the region to this area first")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*bpp || *ppp || *plane) {
      const ChannelParams params = channel.resolve();
      if (*plane) {
        json j = result_json("plane", plane_ppp_outage(params, lambda));
        j["lambda"] = lambda;
        j["params"] = params_json(params);
        out << j.dump() << '\n';
        return exit_ok;
      }
      const Region region = load_region(region_file);
      const Method how = method.resolve(region);
      if (*bpp) {
        json j = result_json("bpp", bpp_outage(params, region, interferers, how));
        j["m"] = interferers;
        j["params"] = params_json(params);
        out << j.dump() << '\n';
      } else {
        json j = result_json("ppp", ppp_outage(params, region, lambda, how));
        j["lambda"] = lambda;
        j["params"] = params_json(params);
        out << j.dump() << '\n';
      }
      return exit_ok;
    }

    if (*sweep) {
      const ChannelParams params = channel.resolve();
      const Region region = load_region(region_file);
      const double A = area(region);
      const InterferenceFactor factor = interference_factor(params, region, method.resolve(region));
      const std::size_t mc_trials =
          simulate_trials > 0 ? to_count(simulate_trials, "--simulate") : 0;
      std::vector<double> grid;
      try {
        grid = parse_range(range);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      std::vector<SweepRecord> records;
      for (const double x : grid) {
        SweepRecord rec;
        rec.x = x;
        SimConfig cfg;
        cfg.trials = mc_trials;
        cfg.seed = method.seed;
        cfg.region = region;
        cfg.params = params;
        cfg.threads = threads;
        std::size_t m = 0;
        double lam = 0.0;
        if (over == "lambda") {
          if (x < 0) throw UsageError("lambda range must be non-negative");
          lam = x;
          m = static_cast<std::size_t>(std::llround(x * A));
          cfg.count = CountModel::poisson(lam);
        } else {
          if (x < 0 || x != std::floor(x)) throw UsageError("m range must hold integers >= 0");
          m = static_cast<std::size_t>(x);
          lam = x / A;
          cfg.count = CountModel::fixed(m);
        }
        const OutageResult b = bpp_outage(params, factor, m);
        const OutageResult q = ppp_outage(params, A, factor, lam);
        rec.epsilon_bpp = b.epsilon;
        rec.coverage_bpp = b.coverage;
        rec.epsilon_ppp = q.epsilon;
        rec.coverage_ppp = q.coverage;
        if (mc_trials > 0) {
          const Estimate est = simulate_outage(cfg);
          rec.mc_mean = est.mean;
          rec.mc_stderr = est.std_error;
        }
        records.push_back(rec);
      }
      if (as_json) {
        out << sweep_to_json(records).dump() << '\n';
      } else {
        write_sweep_csv(out, records);
      }
      return exit_ok;
    }

    if (*simulate) {
      if (m_opt->count() == 0 && l_opt->count() == 0) {
        throw UsageError("simulate needs --m or --lambda");
      }
      SimConfig cfg;
      cfg.params = channel.resolve();
      cfg.region = load_region(region_file);
      cfg.trials = to_count(trials, "--trials");
      cfg.seed = method.seed;
      cfg.threads = threads;
      cfg.count = m_opt->count() ? CountModel::fixed(interferers) : CountModel::poisson(lambda);
      const Estimate est = simulate_outage(cfg);
      json j = {{"model", m_opt->count() ? "bpp" : "ppp"},
                {"mean", est.mean},
                {"std_error", est.std_error},
                {"trials", est.trials},
                {"seed", cfg.seed},
                {"params", params_json(cfg.params)}};
      if (m_opt->count()) {
        j["m"] = interferers;
      } else {
        j["lambda"] = lambda;
      }
      out << j.dump() << '\n';
      return exit_ok;
    }

    if (*info) {
      Region region = load_region(region_file);
      if (target_area > 0) region = scale_to_area(region, target_area);
      const BoundingBox bb = bounding_box(region);
      const DistanceSupport support = distance_support(region);
      json j = {{"type", to_string(region.kind())},
                {"area", area(region)},
                {"bounding_box", {bb.xmin, bb.ymin, bb.xmax, bb.ymax}},
                {"pdf_support", {support.r_min, support.r_max}},
                {"region", region_to_json(region)}};
      if (const auto* poly = region.get_if<RegularPolygon>()) j["r_c"] = poly->r_c();
      out << j.dump() << '\n';
      return exit_ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
  err << "error: no command given\n";
  return exit_usage;
}

}  // namespace spout
