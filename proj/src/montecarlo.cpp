// SPDX-License-Identifier: Apache-2.0
#include "spout/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "spout/error.hpp"

namespace spout {

namespace {

constexpr std::size_t block_size = 8192;

unsigned worker_count(unsigned requested, std::size_t blocks) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(blocks, 1)));
}

// Runs fn(begin, end) over fixed-size index blocks and returns the per-block
// results in block order. Block boundaries do not depend on the worker count.
template <class R, class Fn>
std::vector<R> run_blocks(std::size_t n, unsigned threads, Fn fn) {
  const std::size_t blocks = (n + block_size - 1) / block_size;
  std::vector<R> results(blocks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t b = next++; b < blocks; b = next++) {
        const std::size_t begin = b * block_size;
        results[b] = fn(begin, std::min(n, begin + block_size));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };
  const unsigned workers = worker_count(threads, blocks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

Estimate bernoulli_estimate(std::size_t hits, std::size_t trials) {
  const double mean = static_cast<double>(hits) / static_cast<double>(trials);
  return Estimate{mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials)), trials};
}

std::size_t sum_hits(const std::vector<std::size_t>& blocks) {
  std::size_t hits = 0;
  for (const std::size_t h : blocks) hits += h;
  return hits;
}

}  // namespace

void SimConfig::validate() const {
  if (trials < 1) throw DomainError("simulation needs at least one trial");
  if (count.kind == CountModel::Kind::poisson && !(count.lambda >= 0.0)) {
    throw DomainError("Poisson intensity must be >= 0");
  }
  params.validate();
}

double NetworkRealization::sinr(const ChannelParams& params) const {
  double denominator = std::isinf(params.snr) ? 0.0 : 1.0 / params.snr;
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (active[i]) denominator += gains[i] * std::pow(distances[i], -params.alpha);
  }
  return denominator > 0.0 ? g0 / denominator : std::numeric_limits<double>::infinity();
}

void draw_realization(const Region& region, const ChannelParams& params, std::size_t interferers,
                      CounterRng& rng, NetworkRealization& out) {
  out.g0 = rng.exponential();
  out.distances.resize(interferers);
  out.gains.resize(interferers);
  out.active.resize(interferers);
  for (std::size_t i = 0; i < interferers; ++i) {
    out.distances[i] = sample_distance(region, rng);
    out.gains[i] = rng.exponential();
    out.active[i] = rng.bernoulli(params.p) ? 1 : 0;
  }
}

Estimate simulate_outage(const SimConfig& cfg) {
  cfg.validate();
  const double mean_count =
      cfg.count.kind == CountModel::Kind::poisson ? cfg.count.lambda * area(cfg.region) : 0.0;
  auto block = [&](std::size_t begin, std::size_t end) {
    NetworkRealization net;
    std::size_t hits = 0;
    for (std::size_t t = begin; t < end; ++t) {
      CounterRng rng(cfg.seed, t);
      const std::size_t m = cfg.count.kind == CountModel::Kind::fixed
                                ? cfg.count.interferers
                                : static_cast<std::size_t>(poisson(rng, mean_count));
      draw_realization(cfg.region, cfg.params, m, rng, net);
      if (net.sinr(cfg.params) <= cfg.params.beta) ++hits;
    }
    return hits;
  };
  return bernoulli_estimate(sum_hits(run_blocks<std::size_t>(cfg.trials, cfg.threads, block)),
                            cfg.trials);
}

Estimate simulate_conditional(const ChannelParams& params, std::span<const double> distances,
                              std::size_t trials, std::uint64_t seed, unsigned threads) {
  params.validate();
  if (trials < 1) throw DomainError("simulation needs at least one trial");
  for (const double r : distances) {
    if (!(r > 0.0)) throw DomainError("interferer distances must be > 0");
  }
  auto block = [&](std::size_t begin, std::size_t end) {
    NetworkRealization net;
    net.distances.assign(distances.begin(), distances.end());
    net.gains.resize(distances.size());
    net.active.resize(distances.size());
    std::size_t hits = 0;
    for (std::size_t t = begin; t < end; ++t) {
      CounterRng rng(seed, t);
      net.g0 = rng.exponential();
      for (std::size_t i = 0; i < distances.size(); ++i) {
        net.gains[i] = rng.exponential();
        net.active[i] = rng.bernoulli(params.p) ? 1 : 0;
      }
      if (net.sinr(params) <= params.beta) ++hits;
    }
    return hits;
  };
  return bernoulli_estimate(sum_hits(run_blocks<std::size_t>(trials, threads, block)), trials);
}

FactorEstimate estimate_interference_factor(const Region& region, const ChannelParams& params,
                                            std::size_t n, std::uint64_t seed, unsigned threads) {
  params.validate();
  if (n < 1) throw DomainError("interference-factor estimate needs n >= 1");
  struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  auto block = [&](std::size_t begin, std::size_t end) {
    Moments m;
    for (std::size_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      const double r = sample_distance(region, rng);
      const double d = 1.0 / (1.0 + std::pow(r, params.alpha) / params.beta);
      m.sum += d;
      m.sum_sq += d * d;
    }
    return m;
  };
  Moments total;
  for (const Moments& m : run_blocks<Moments>(n, threads, block)) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double count = static_cast<double>(n);
  const double deficit = total.sum / count;
  double variance = 0.0;
  if (n > 1) variance = std::max(0.0, (total.sum_sq - count * deficit * deficit) / (count - 1.0));
  return FactorEstimate{1.0 - deficit, deficit, std::sqrt(variance / count), n};
}

}  // namespace spout
