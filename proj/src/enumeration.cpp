#include "queenon/enumeration.hpp"

#include <stdexcept>
#include <string>

#include "queenon/rng.hpp"

namespace queenon {

namespace {

// One recursion serves both counting and streaming. Masks are bitboards over
// rows (n bits), plus-diagonals (2n-1 bits keyed by x+y-2) and
// minus-diagonals (2n-1 bits keyed by y-x+n-1).
struct Search {
  int n;
  std::uint64_t rows = 0, plus = 0, minus = 0;
  std::vector<int> row_of;  // row chosen per column, 1-based values
  std::uint64_t count = 0;
  const std::function<void(const std::vector<Position>&)>* visit = nullptr;

  void run(int x) {
    if (x > n) {
      ++count;
      if (visit) {
        std::vector<Position> config(n);
        for (int i = 1; i <= n; ++i) config[i - 1] = {i, row_of[i - 1]};
        (*visit)(config);
      }
      return;
    }
    for (int y = 1; y <= n; ++y) {
      const std::uint64_t rbit = 1ull << (y - 1);
      const std::uint64_t pbit = 1ull << (x + y - 2);
      const std::uint64_t mbit = 1ull << (y - x + n - 1);
      if ((rows & rbit) || (plus & pbit) || (minus & mbit)) continue;
      rows |= rbit; plus |= pbit; minus |= mbit;
      row_of[x - 1] = y;
      run(x + 1);
      rows &= ~rbit; plus &= ~pbit; minus &= ~mbit;
    }
  }
};

}  // namespace

std::uint64_t count_configurations(int n) {
  if (n < 1) throw std::invalid_argument("count_configurations: n must be >= 1");
  if (n > kCountLimit)
    throw std::invalid_argument("count_configurations: n > " +
                                std::to_string(kCountLimit) + " not supported");
  Search s;
  s.n = n;
  s.row_of.assign(n, 0);
  s.run(1);
  return s.count;
}

void enumerate_configurations(
    int n, const std::function<void(const std::vector<Position>&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_configurations: n must be >= 1");
  if (n > kEnumerateLimit)
    throw std::invalid_argument("enumerate_configurations: n > " +
                                std::to_string(kEnumerateLimit) + " not supported");
  Search s;
  s.n = n;
  s.row_of.assign(n, 0);
  s.visit = &visit;
  s.run(1);
}

std::vector<std::vector<Position>> all_configurations(int n) {
  std::vector<std::vector<Position>> out;
  enumerate_configurations(n, [&](const std::vector<Position>& c) { out.push_back(c); });
  return out;
}

std::vector<Position> sample_uniform(int n, std::uint64_t seed) {
  const auto all = all_configurations(n);
  if (all.empty())
    throw std::invalid_argument("sample_uniform: no configurations exist for n = " +
                                std::to_string(n));
  SplitMix64 rng(seed);
  return all[rng.uniform_below(all.size())];
}

}  // namespace queenon
