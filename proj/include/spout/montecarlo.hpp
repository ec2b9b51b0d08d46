// SPDX-License-Identifier: Apache-2.0
//
// Brute-force network simulator used as the oracle for the closed forms.
// Every trial draws its own interferer count, positions, fading gains and
// activity flags from a stream keyed by (seed, trial index), so results are a
// function of the configuration alone, whatever the number of workers.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spout/geometry.hpp"
#include "spout/outage.hpp"
#include "spout/random.hpp"

namespace spout {

struct CountModel {
  enum class Kind { fixed, poisson };

  Kind kind = Kind::fixed;
  std::size_t interferers = 0;  ///< for Kind::fixed
  double lambda = 0.0;          ///< for Kind::poisson, per unit area

  static CountModel fixed(std::size_t m) { return {Kind::fixed, m, 0.0}; }
  static CountModel poisson(double lambda) { return {Kind::poisson, 0, lambda}; }
};

struct SimConfig {
  std::size_t trials = 1'000'000;
  std::uint64_t seed = 1;
  CountModel count;
  Region region = Annulus(0.0, 1.0);
  ChannelParams params;
  unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()

  void validate() const;
};

/// One draw of the network around the receiver.
struct NetworkRealization {
  double g0 = 1.0;  ///< reference-link fading gain
  std::vector<double> distances;
  std::vector<double> gains;
  std::vector<std::uint8_t> active;

  /// Instantaneous SINR g0 / (1/SNR + sum I_i g_i r_i^-alpha).
  double sinr(const ChannelParams& params) const;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

/// Sample mean of g(r) together with that of 1 - g(r).
struct FactorEstimate {
  double mean = 0.0;
  double deficit = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

/// Draws a realization with `interferers` nodes into `out`, reusing its storage.
void draw_realization(const Region& region, const ChannelParams& params, std::size_t interferers,
                      CounterRng& rng, NetworkRealization& out);

/// Fraction of trials with SINR <= beta.
Estimate simulate_outage(const SimConfig& cfg);

/// Fading-only simulation at a fixed topology.
Estimate simulate_conditional(const ChannelParams& params, std::span<const double> distances,
                              std::size_t trials, std::uint64_t seed, unsigned threads = 0);

/// Average of g(r) = (1 + beta r^-alpha)^-1 over n uniformly sampled distances.
FactorEstimate estimate_interference_factor(const Region& region, const ChannelParams& params,
                                            std::size_t n, std::uint64_t seed,
                                            unsigned threads = 0);

}  // namespace spout
