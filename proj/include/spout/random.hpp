// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace spout {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Random stream keyed by (seed, stream index).
///
/// Each Monte-Carlo replication owns the stream for its own index, so a run
/// is a function of the seed alone however the replications are scheduled.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : state_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1].
  double uniform_open_low() noexcept {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }

  /// Unit-mean exponential by inversion.
  double exponential() noexcept { return -std::log(uniform_open_low()); }

  bool bernoulli(double p) noexcept { return uniform() < p; }

 private:
  std::uint64_t state_;
};

/// Poisson variate by sequential inversion. Means above 500 are split into
/// independent chunks so that exp(-mean) never underflows.
inline std::uint64_t poisson(CounterRng& rng, double mean) {
  constexpr double chunk = 500.0;
  std::uint64_t total = 0;
  while (mean > 0.0) {
    const double mu = mean > chunk ? chunk : mean;
    mean -= mu;
    const double u = rng.uniform();
    double pmf = std::exp(-mu);
    double cdf = pmf;
    std::uint64_t m = 0;
    // The bound guards against u landing in the last ulp of the cdf.
    const auto bound = static_cast<std::uint64_t>(mu + 40.0 * std::sqrt(mu) + 40.0);
    while (u >= cdf && m < bound) {
      ++m;
      pmf *= mu / static_cast<double>(m);
      cdf += pmf;
    }
    total += m;
  }
  return total;
}

}  // namespace spout
