#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace queenon {

// Deterministic, platform-independent randomness. All randomness in the
// project flows from a single 64-bit master seed through stream splitting:
// stream k of seed s is SplitMix64(mix(s, k)), so per-trial streams are
// reproducible regardless of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), unbiased via rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be > 0");
    const std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % bound;
  }

  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

// Sampling from a fixed discrete distribution by binary search over the CDF.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& weights);
  // Index in [0, size), consuming one uniform01 draw.
  int sample(SplitMix64& rng) const;
  int size() const { return static_cast<int>(cdf_.size()); }

 private:
  std::vector<double> cdf_;
};

}  // namespace queenon
