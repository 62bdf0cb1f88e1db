#pragma once

// Seeded Monte Carlo integration over boxes.
//
// Random numbers come from SplitMix64 used as a counter-based generator:
// the j-th coordinate of sample i is
//   u = ((mix(seed + (i * dim + j + 1) * 0x9E3779B97F4A7C15) >> 11) + 0.5) * 2^-53
// where mix is the SplitMix64 output function. Any sample can be regenerated
// from (seed, i) alone, so block-parallel runs give bit-identical results.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "fhardy/errors.hpp"
#include "fhardy/quadrature.hpp"

namespace fhardy {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in the open interval (0, 1) for stream position `counter`.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64_mix(seed + (counter + 1) * kSplitMixGamma);
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Sequential SplitMix64 stream; equivalent to counter_uniform with counters 0, 1, 2, ...
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}
  double uniform() { return counter_uniform(seed_, counter_++); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    const int v = lo + static_cast<int>(uniform() * (hi - lo + 1));
    return std::min(v, hi);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct Interval {
  double lo;
  double hi;
};

struct MonteCarloOptions {
  unsigned threads = 1;
  std::uint64_t block_size = 1 << 14;
};

namespace detail {

struct RunningMoments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    count += 1.0;
    const double d = v - mean;
    mean += d / count;
    m2 += d * (v - mean);
  }
  // Chan et al. pairwise combination
  void merge(const RunningMoments& o) {
    if (o.count == 0.0) return;
    if (count == 0.0) {
      *this = o;
      return;
    }
    const double n = count + o.count;
    const double d = o.mean - mean;
    mean += d * o.count / n;
    m2 += o.m2 + d * d * count * o.count / n;
    count = n;
  }
};

}  // namespace detail

/// Box volume times the sample mean of F; error_estimate is the standard error.
template <class F>
EnergyReport monte_carlo_integral(F&& f, const std::vector<Interval>& box, std::uint64_t samples,
                                  std::uint64_t seed, const MonteCarloOptions& options = {}) {
  if (samples == 0) throw ParameterError(ErrorKind::invalid_argument, "sample count must be positive");
  if (box.empty()) throw ParameterError(ErrorKind::invalid_argument, "integration box is empty");
  double volume = 1.0;
  for (const auto& iv : box) {
    if (!(iv.hi > iv.lo) || !std::isfinite(iv.hi - iv.lo))
      throw ParameterError(ErrorKind::invalid_argument, "integration box has an empty side");
    volume *= iv.hi - iv.lo;
  }
  const std::uint64_t dim = box.size();
  const std::uint64_t block = std::max<std::uint64_t>(options.block_size, 1);
  const std::uint64_t blocks = (samples + block - 1) / block;
  std::vector<detail::RunningMoments> moments(blocks);

  auto run_block = [&](std::uint64_t b) {
    std::vector<double> point(dim);
    detail::RunningMoments m;
    const std::uint64_t end = std::min(samples, (b + 1) * block);
    for (std::uint64_t i = b * block; i < end; ++i) {
      for (std::uint64_t j = 0; j < dim; ++j) {
        const double u = counter_uniform(seed, i * dim + j);
        point[j] = box[j].lo + (box[j].hi - box[j].lo) * u;
      }
      m.add(f(std::span<const double>(point)));
    }
    moments[b] = m;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(blocks)));
  if (threads == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t b = t; b < blocks; b += threads) run_block(b);
      });
    for (auto& th : pool) th.join();
  }
  detail::RunningMoments total;
  for (const auto& m : moments) total.merge(m);  // fixed order
  const double n = static_cast<double>(samples);
  const double variance = samples > 1 ? total.m2 / (n - 1.0) : 0.0;
  return {volume * total.mean, volume * std::sqrt(variance / n), samples};
}

}  // namespace fhardy
