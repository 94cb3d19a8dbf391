#include "queenon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace queenon {

namespace {

// Max / min of |k-1|, |k| for a band [k-1, k] in lattice units offset by -N.
inline int band_abs_max(int band, int n_steps) {
  const int a = band - 1 - n_steps, b = band - n_steps;
  return std::max(std::abs(a), std::abs(b));
}

}  // namespace

CellGeometry::CellGeometry(int n_steps) : n_(n_steps) {
  if (n_steps < 1) throw std::invalid_argument("CellGeometry: n_steps must be >= 1");
  const int two_n = 2 * n_;
  cell_index_.assign(static_cast<std::size_t>(two_n) * two_n, -1);
  for (int u = 1; u <= two_n; ++u) {
    for (int v = 1; v <= two_n; ++v) {
      if (kind({u, v}) == CellKind::empty) continue;
      cell_index_[static_cast<std::size_t>(u - 1) * two_n + (v - 1)] =
          static_cast<int>(cells_.size());
      cells_.push_back({u, v});
    }
  }

  tris_.reserve(static_cast<std::size_t>(4) * n_ * n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      for (int c = 0; c < 4; ++c) {
        const auto corner = static_cast<TriCorner>(c);
        int u = 0, v = 0;
        switch (corner) {
          case TriCorner::bottom: u = i + j - 1; v = n_ + j - i;     break;
          case TriCorner::right:  u = i + j;     v = n_ + j - i;     break;
          case TriCorner::top:    u = i + j;     v = n_ + j - i + 1; break;
          case TriCorner::left:   u = i + j - 1; v = n_ + j - i + 1; break;
        }
        tris_.push_back({i, j, corner, CellId{u, v}});
      }
    }
  }

  // Partition self-checks: every triangle lands in a nonempty cell and the
  // cell areas sum to 1.
  double total = 0.0;
  for (const CellId& c : cells_) total += area(c);
  if (std::abs(total - 1.0) > 1e-12)
    throw std::logic_error("CellGeometry: cell areas do not sum to 1");
  for (const Triangle& t : tris_)
    if (!contains(t.cell)) throw std::logic_error("CellGeometry: triangle in empty cell");
}

CellKind CellGeometry::kind(CellId c) const {
  if (c.u < 1 || c.u > 2 * n_ || c.v < 1 || c.v > 2 * n_) return CellKind::empty;
  const int p = band_abs_max(c.u, n_), q = band_abs_max(c.v, n_);
  if (p + q <= n_) return CellKind::square;
  if (p + q == n_ + 1) return CellKind::half;
  return CellKind::empty;
}

double CellGeometry::area(CellId c) const {
  switch (kind(c)) {
    case CellKind::square: return 1.0 / (2.0 * n_ * n_);
    case CellKind::half:   return 1.0 / (4.0 * n_ * n_);
    default: return 0.0;
  }
}

int CellGeometry::cell_index(CellId c) const {
  if (c.u < 1 || c.u > 2 * n_ || c.v < 1 || c.v > 2 * n_) return -1;
  return cell_index_[static_cast<std::size_t>(c.u - 1) * 2 * n_ + (c.v - 1)];
}

std::array<std::int64_t, 2> CellGeometry::center_numerator(CellId c) const {
  // Lattice units: s = a/N - 0 with a = u - N in [-N, N] etc. All centers are
  // rational with denominator 6N; we return numerators of (x, y) over 6N.
  const CellKind k = kind(c);
  if (k == CellKind::empty) throw std::invalid_argument("center of empty cell");
  const std::int64_t N = n_;
  if (k == CellKind::square) {
    // s center = (2u - 1 - 2N) / (2N), d center = (2v - 1 - 2N) / (2N)
    // x = (s - d)/2 = (u - v) / (2N), y = (s + d)/2 = (u + v - 1 - 2N) / (2N)
    return {3 * (c.u - c.v), 3 * (c.u + c.v - 1 - 2 * N)};
  }
  // Half-square: centroid of the inner triangle. Box corners in lattice units
  // (s*N, d*N): (u-1-N, v-1-N), (u-N, v-1-N), (u-1-N, v-N), (u-N, v-N). The
  // two corners with l1 norm N are the cut, the one with norm N-1 is inner.
  const int as[2] = {c.u - 1 - n_, c.u - n_};
  const int bs[2] = {c.v - 1 - n_, c.v - n_};
  std::int64_t sum_a = 0, sum_b = 0;
  int found = 0;
  for (int a : as) {
    for (int b : bs) {
      const int norm = std::abs(a) + std::abs(b);
      if (norm <= n_) {  // vertices of the inner triangle (norms N-1, N, N)
        sum_a += a;
        sum_b += b;
        ++found;
      }
    }
  }
  if (found != 3) throw std::logic_error("half cell without 3 inner corners");
  // centroid: s = sum_a/(3N), d = sum_b/(3N); x = (s-d)/2, y = (s+d)/2
  return {sum_a - sum_b, sum_a + sum_b};
}

std::array<double, 2> CellGeometry::center(CellId c) const {
  const auto num = center_numerator(c);
  const double den = 6.0 * n_;
  return {static_cast<double>(num[0]) / den, static_cast<double>(num[1]) / den};
}

CellId CellGeometry::assign(int n, int i, int j) const {
  if (n < 1 || i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("CellGeometry::assign: position out of range");
  // sigma_{i,j}^n maps to the diamond |sN' - sc| + |dN' - dc| <= N in units
  // of 1/(nN), with sc = ((i+j-1) - n)N and dc = (j-i)N.
  const std::int64_t N = n_;
  const std::int64_t sc = (static_cast<std::int64_t>(i) + j - 1 - n) * N;
  const std::int64_t dc = (static_cast<std::int64_t>(j) - i) * N;
  // Band u covers s*nN in [(u-1-N)n, (u-N)n]; bands intersecting
  // [center - N, center + N] satisfy (u-N)n >= center - N and
  // (u-1-N)n <= center + N.
  auto floor_div = [](std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  auto ceil_div = [&](std::int64_t a, std::int64_t b) { return -floor_div(-a, b); };
  auto band_range = [&](std::int64_t center) {
    std::int64_t lo = ceil_div(center - N, n) + N;
    std::int64_t hi = floor_div(center + N, n) + N + 1;
    lo = std::max<std::int64_t>(1, lo);
    hi = std::min<std::int64_t>(2 * N, hi);
    return std::pair<std::int64_t, std::int64_t>(lo, hi);
  };
  const auto [ulo, uhi] = band_range(sc);
  const auto [vlo, vhi] = band_range(dc);

  bool have = false;
  CellId best{};
  std::array<std::int64_t, 2> best_center{};
  for (std::int64_t u = ulo; u <= uhi; ++u) {
    for (std::int64_t v = vlo; v <= vhi; ++v) {
      const CellId cand{static_cast<int>(u), static_cast<int>(v)};
      if (!contains(cand)) continue;
      // l1 distance from the diamond center to the cell box, units 1/(nN)
      const std::int64_t slo = (u - 1 - N) * n, shi = (u - N) * n;
      const std::int64_t dlo = (v - 1 - N) * n, dhi = (v - N) * n;
      const std::int64_t ds = std::max<std::int64_t>({0, slo - sc, sc - shi});
      const std::int64_t dd = std::max<std::int64_t>({0, dlo - dc, dc - dhi});
      if (ds + dd > N) continue;  // no intersection with the closed diamond
      const auto ctr = center_numerator(cand);
      if (!have || ctr < best_center) {
        have = true;
        best = cand;
        best_center = ctr;
      }
    }
  }
  if (!have) throw std::logic_error("CellGeometry::assign: no intersecting cell");
  return best;
}

int plus_band_of_diagonal(int n_steps, int n, int diag_sum) {
  if (diag_sum < 2 || diag_sum > 2 * n)
    throw std::invalid_argument("plus_band_of_diagonal: diagonal out of range");
  // center s-value of the diagonal: (diag_sum - 1)/n - 1; band = ceil((s+1)N)
  const std::int64_t num = static_cast<std::int64_t>(diag_sum - 1) * n_steps;  // (s+1)*N*n
  std::int64_t band = (num + n - 1) / n;
  if (band < 1) band = 1;
  if (band > 2 * n_steps) band = 2 * n_steps;
  return static_cast<int>(band);
}

int minus_band_of_diagonal(int n_steps, int n, int diag_diff) {
  if (diag_diff <= -n || diag_diff >= n)
    throw std::invalid_argument("minus_band_of_diagonal: diagonal out of range");
  const std::int64_t num = (static_cast<std::int64_t>(diag_diff) + n) * n_steps;
  std::int64_t band = (num + n - 1) / n;
  if (band < 1) band = 1;
  if (band > 2 * n_steps) band = 2 * n_steps;
  return static_cast<int>(band);
}

}  // namespace queenon
