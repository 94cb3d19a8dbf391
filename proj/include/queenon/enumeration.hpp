#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "queenon/board.hpp"

namespace queenon {

// Exact brute-force oracle for small boards. Column-by-column backtracking
// over x = 1..n choosing the row of each column, with row/diagonal masks.
// No symmetry reduction, so counting and streaming share one recursion and
// one deterministic order (lexicographic in the column-row sequence).

inline constexpr int kCountLimit = 16;      // Q(16) in ~seconds
inline constexpr int kEnumerateLimit = 13;  // full solution lists kept in memory

// Q(n). Throws above kCountLimit.
std::uint64_t count_configurations(int n);

// Calls visit(config) once per configuration, deterministic order. The
// config is sorted by x. Throws above kEnumerateLimit.
void enumerate_configurations(int n,
                              const std::function<void(const std::vector<Position>&)>& visit);

// All configurations in enumeration order.
std::vector<std::vector<Position>> all_configurations(int n);

// Uniform over the Q(n) configurations, deterministic given seed.
// Throws if Q(n) = 0 or n > kEnumerateLimit.
std::vector<Position> sample_uniform(int n, std::uint64_t seed);

}  // namespace queenon
