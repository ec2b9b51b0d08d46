// SPDX-License-Identifier: Apache-2.0
#include "spout/outage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spout/error.hpp"
#include "spout/montecarlo.hpp"

namespace spout {

using std::numbers::pi;

namespace {

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

OutageResult make_result(double epsilon, MethodTag tag, const Diagnostics& diag) {
  const double e = clamp_probability(epsilon);
  return OutageResult{e, 1.0 - e, tag, diag};
}

// beta / (beta + r^alpha), the per-interferer deficit 1 - g(r).
double deficit_at(double r, double alpha, double beta) {
  return 1.0 / (1.0 + std::pow(r, alpha) / beta);
}

InterferenceFactor from_deficit(double deficit, MethodTag tag, const Diagnostics& diag) {
  return InterferenceFactor{1.0 - deficit, deficit, tag, diag};
}

InterferenceFactor closed_factor(const ChannelParams& params, const Region& region,
                                 const SeriesControl& series) {
  const double A = area(region);
  if (const auto* ring = region.get_if<Annulus>()) {
    const double bracket =
        phi(ring->r_out(), params.alpha, params.beta) - phi(ring->r_in(), params.alpha, params.beta);
    return from_deficit(-pi * bracket / A, MethodTag::closed_form_annulus, {});
  }
  if (const auto* poly = region.get_if<RegularPolygon>()) {
    const KernelValue th = theta(poly->r_in(), poly->r_c(), poly->r_out(), poly->sides(),
                                 params.alpha, params.beta, series);
    Diagnostics diag;
    diag.series_terms = th.terms;
    diag.quad_error = th.quad_error;
    return from_deficit(-th.value / A, MethodTag::closed_form_polygon, diag);
  }
  throw UnsupportedOperation(
      "no closed form for a multipolygon interference factor; use the grid or sample method");
}

InterferenceFactor quadrature_factor(const ChannelParams& params, const Region& region) {
  std::vector<double> breaks;
  if (const auto* ring = region.get_if<Annulus>()) {
    breaks = {ring->r_in(), ring->r_out()};
  } else if (const auto* poly = region.get_if<RegularPolygon>()) {
    breaks = {poly->r_in(), poly->r_c(), poly->r_out()};
  } else {
    throw UnsupportedOperation(
        "no distance pdf for a multipolygon; use the grid or sample method");
  }
  auto integrand = [&](double r) {
    return distance_pdf(region, r) * deficit_at(r, params.alpha, params.beta);
  };
  const QuadResult q = integrate_pieces(integrand, breaks, precise_quad);
  Diagnostics diag;
  diag.quad_error = q.abs_error;
  return from_deficit(q.value, MethodTag::quadrature, diag);
}

InterferenceFactor grid_factor(const ChannelParams& params, const Region& region,
                               std::size_t count) {
  const std::vector<Point> points = grid_points(region, count);
  double sum = 0.0;
  for (const Point& pt : points) sum += deficit_at(pt.norm(), params.alpha, params.beta);
  Diagnostics diag;
  diag.samples = points.size();
  return from_deficit(sum / static_cast<double>(points.size()), MethodTag::grid, diag);
}

}  // namespace

void ChannelParams::validate() const {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > 2");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and > 0");
  if (!(snr > 0.0)) throw DomainError("snr must be > 0 (inf allowed)");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
}

double ChannelParams::noise_term() const { return std::isinf(snr) ? 0.0 : beta / snr; }

const char* to_string(MethodTag tag) {
  switch (tag) {
    case MethodTag::closed_form_polygon:
      return "closed-form-polygon";
    case MethodTag::closed_form_annulus:
      return "closed-form-annulus";
    case MethodTag::quadrature:
      return "quadrature";
    case MethodTag::sampled:
      return "sampled";
    case MethodTag::grid:
      return "grid";
    case MethodTag::plane:
      return "plane";
  }
  return "unknown";
}

double conditional_outage(const ChannelParams& params, std::span<const double> distances) {
  params.validate();
  double product = 1.0;
  for (const double r : distances) {
    if (!(r > 0.0)) throw DomainError("interferer distances must be > 0");
    product *= 1.0 - params.p * deficit_at(r, params.alpha, params.beta);
  }
  return clamp_probability(1.0 - std::exp(-params.noise_term()) * product);
}

InterferenceFactor interference_factor(const ChannelParams& params, const Region& region,
                                       const Method& method) {
  params.validate();
  switch (method.kind) {
    case Method::Kind::closed:
      return closed_factor(params, region, method.series);
    case Method::Kind::quadrature:
      return quadrature_factor(params, region);
    case Method::Kind::grid:
      return grid_factor(params, region, method.count);
    case Method::Kind::sample: {
      if (method.count == 0) throw DomainError("sample method needs at least one point");
      const FactorEstimate est = estimate_interference_factor(region, params, method.count, method.seed);
      Diagnostics diag;
      diag.samples = est.trials;
      diag.std_error = est.std_error;
      return InterferenceFactor{est.mean, est.deficit, MethodTag::sampled, diag};
    }
  }
  throw DomainError("unknown interference-factor method");
}

OutageResult bpp_outage(const ChannelParams& params, const Region& region, std::size_t interferers,
                        const Method& method) {
  return bpp_outage(params, interference_factor(params, region, method), interferers);
}

OutageResult bpp_outage(const ChannelParams& params, const InterferenceFactor& factor,
                        std::size_t interferers) {
  params.validate();
  const double per_interferer = 1.0 - params.p * factor.deficit;
  const double epsilon =
      1.0 - std::exp(-params.noise_term()) *
                std::pow(per_interferer, static_cast<double>(interferers));
  return make_result(epsilon, factor.method, factor.diagnostics);
}

OutageResult ppp_outage(const ChannelParams& params, const Region& region, double lambda,
                        const Method& method) {
  return ppp_outage(params, area(region), interference_factor(params, region, method), lambda);
}

OutageResult ppp_outage(const ChannelParams& params, double region_area,
                        const InterferenceFactor& factor, double lambda) {
  params.validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be >= 0");
  const double exponent = -params.noise_term() - lambda * params.p * region_area * factor.deficit;
  return make_result(-std::expm1(exponent), factor.method, factor.diagnostics);
}

OutageResult ppp_outage_poisson_sum(const ChannelParams& params, double region_area,
                                    const InterferenceFactor& factor, double lambda,
                                    double tail_mass) {
  params.validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be >= 0");
  const double mean = lambda * region_area;
  const double noise = std::exp(-params.noise_term());
  const double per_interferer = 1.0 - params.p * factor.deficit;
  double mass = 0.0;
  double epsilon = 0.0;
  for (std::size_t m = 0;; ++m) {
    const double pmf = poisson_pmf(m, mean);
    mass += pmf;
    epsilon += pmf * (1.0 - noise * std::pow(per_interferer, static_cast<double>(m)));
    if (mass >= 1.0 - tail_mass && static_cast<double>(m) >= mean) break;
    if (m > 100 && static_cast<double>(m) > mean + 50.0 * std::sqrt(mean) + 100.0) break;
  }
  return make_result(epsilon, factor.method, factor.diagnostics);
}

OutageResult plane_ppp_outage(const ChannelParams& params, double lambda) {
  params.validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be >= 0");
  const double exponent =
      -params.noise_term() + pi * lambda * params.p * plane_limit_phi(params.alpha, params.beta);
  return make_result(-std::expm1(exponent), MethodTag::plane, {});
}

double poisson_pmf(std::size_t m, double mean) {
  if (!(mean >= 0.0)) throw DomainError("Poisson mean must be >= 0");
  if (mean == 0.0) return m == 0 ? 1.0 : 0.0;
  const double k = static_cast<double>(m);
  return std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0));
}

}  // namespace spout
