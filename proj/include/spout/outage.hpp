// SPDX-License-Identifier: Apache-2.0
//
// Spatially averaged outage probability of the reference link under Rayleigh
// fading, with interferers from a binomial (fixed M) or Poisson (intensity
// lambda) point process. All quantities are linear; dB conversion belongs to
// the caller.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

#include "spout/geometry.hpp"
#include "spout/special.hpp"

namespace spout {

struct ChannelParams {
  double alpha = 3.2;  ///< path-loss exponent, > 2
  double beta = 1.0;   ///< SINR threshold
  double snr = 10.0;   ///< average SNR; +inf means no noise
  double p = 1.0;      ///< interferer activity probability

  /// Throws DomainError when a field is out of range.
  void validate() const;
  /// beta / SNR, with 0 for SNR = inf.
  double noise_term() const;
};

enum class MethodTag { closed_form_polygon, closed_form_annulus, quadrature, sampled, grid, plane };

const char* to_string(MethodTag tag);

struct Diagnostics {
  int series_terms = 0;
  double quad_error = 0.0;
  std::size_t samples = 0;
  double std_error = 0.0;  ///< of the interference factor, for sampled methods
};

struct OutageResult {
  double epsilon = 0.0;
  double coverage = 1.0;
  MethodTag method = MethodTag::closed_form_annulus;
  Diagnostics diagnostics;
};

/// Evaluation route for the interference factor E_r[r^a / (beta + r^a)].
struct Method {
  enum class Kind { closed, quadrature, grid, sample };

  Kind kind = Kind::closed;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  SeriesControl series{};

  static Method closed(SeriesControl series = {}) { return {Kind::closed, 0, 0, series}; }
  /// Quadrature of the distance pdf against g(r).
  static Method quadrature() { return {Kind::quadrature, 0, 0, {}}; }
  static Method grid(std::size_t points) { return {Kind::grid, points, 0, {}}; }
  static Method sample(std::size_t points, std::uint64_t seed) {
    return {Kind::sample, points, seed, {}};
  }
};

/// Interference factor together with its complement.
///
/// `deficit` = 1 - value = E_r[beta / (beta + r^alpha)] is computed directly
/// so that small deficits (far or weak interferers) keep full precision.
struct InterferenceFactor {
  double value = 1.0;
  double deficit = 0.0;
  MethodTag method = MethodTag::closed_form_annulus;
  Diagnostics diagnostics;
};

/// Outage for fixed interferer distances, averaged over fading only.
double conditional_outage(const ChannelParams& params, std::span<const double> distances);

InterferenceFactor interference_factor(const ChannelParams& params, const Region& region,
                                       const Method& method = Method::closed());

OutageResult bpp_outage(const ChannelParams& params, const Region& region, std::size_t interferers,
                        const Method& method = Method::closed());
OutageResult bpp_outage(const ChannelParams& params, const InterferenceFactor& factor,
                        std::size_t interferers);

OutageResult ppp_outage(const ChannelParams& params, const Region& region, double lambda,
                        const Method& method = Method::closed());
OutageResult ppp_outage(const ChannelParams& params, double region_area,
                        const InterferenceFactor& factor, double lambda);

/// PPP outage as the Poisson mixture sum_m pmf[m] eps[m], truncated where the
/// remaining Poisson mass drops below `tail_mass`.
OutageResult ppp_outage_poisson_sum(const ChannelParams& params, double region_area,
                                    const InterferenceFactor& factor, double lambda,
                                    double tail_mass = 1e-12);

/// PPP over the whole plane.
OutageResult plane_ppp_outage(const ChannelParams& params, double lambda);

double poisson_pmf(std::size_t m, double mean);

}  // namespace spout
