#include "queenon/rng.hpp"

#include <algorithm>

namespace queenon {

DiscreteSampler::DiscreteSampler(const std::vector<double>& weights) {
  if (weights.empty()) throw std::invalid_argument("DiscreteSampler: empty weights");
  cdf_.reserve(weights.size());
  double acc = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("DiscreteSampler: negative weight");
    acc += w;
    cdf_.push_back(acc);
  }
  if (acc <= 0.0) throw std::invalid_argument("DiscreteSampler: zero total weight");
  for (double& c : cdf_) c /= acc;
  cdf_.back() = 1.0;
}

int DiscreteSampler::sample(SplitMix64& rng) const {
  const double u = rng.uniform01();
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<int>(it - cdf_.begin());
}

}  // namespace queenon
