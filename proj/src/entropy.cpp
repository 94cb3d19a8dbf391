#include "queenon/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace queenon {

namespace {

constexpr double kTwoLog2Minus3 = 2.0 * 0.693147180559945309417232121458 - 3.0;
constexpr double kZeroDensity = 1e-15;

inline double xlogx(double x) { return x > kZeroDensity ? x * std::log(x) : 0.0; }

// Integral over a segment of length h of g log(2g), g linear from p0 to p1.
// With u = 2g the antiderivative of u log u is u^2/2 log u - u^2/4.
double segment_glog2g(double p0, double p1, double h) {
  const double u0 = 2.0 * p0, u1 = 2.0 * p1;
  auto F = [](double u) { return u <= kZeroDensity ? 0.0 : u * u / 2.0 * std::log(u) - u * u / 4.0; };
  if (std::abs(u1 - u0) < 1e-13) {
    return u0 <= kZeroDensity ? 0.0 : h * p0 * std::log(u0);
  }
  return h * (F(u1) - F(u0)) / (2.0 * (u1 - u0));
}

// D({p_i}) = sum p_i log(m p_i) for a discrete distribution of m atoms.
double discrete_kl(const std::vector<double>& p) {
  const double m = static_cast<double>(p.size());
  double out = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw std::invalid_argument("discrete_kl: negative probability");
    if (x > kZeroDensity) out += x * std::log(m * x);
  }
  return out;
}

}  // namespace

double kl_square(const StepQueenon& q) {
  const int N = q.n_steps();
  double out = 0.0;
  for (double g : q.grid()) out += xlogx(g);
  return out / (static_cast<double>(N) * N);
}

double kl_diag(const DiagMarginal& m) {
  const int N = m.n_steps;
  const double h = 1.0 / N;
  double out = 0.0;
  for (int k = 0; k < 2 * N; ++k) {
    const double p0 = 1.0 - m.density_breakpoints[k];
    const double p1 = 1.0 - m.density_breakpoints[k + 1];
    if (p0 < -1e-9 || p1 < -1e-9)
      throw std::invalid_argument("kl_diag: complement density negative at breakpoint " +
                                  std::to_string(k));
    out += segment_glog2g(std::max(0.0, p0), std::max(0.0, p1), h);
  }
  return out;
}

double kl_diag_quadrature(const DiagMarginal& m, double tol) {
  const int N = m.n_steps;
  const double h = 1.0 / N;
  auto integrand = [](double g) { return g <= kZeroDensity ? 0.0 : g * std::log(2.0 * g); };
  double total = 0.0;
  for (int k = 0; k < 2 * N; ++k) {
    const double p0 = std::max(0.0, 1.0 - m.density_breakpoints[k]);
    const double p1 = std::max(0.0, 1.0 - m.density_breakpoints[k + 1]);
    // Recursive Simpson on the linear piece.
    struct Rec {
      double p0, p1, h;
      double operator()(double t) const { return p0 + (p1 - p0) * t / h; }
    } g{p0, p1, h};
    std::function<double(double, double, double, double, double, double, int)> simpson =
        [&](double a, double b, double fa, double fm, double fb, double eps,
            int depth) -> double {
      const double m1 = (a + 3 * b) / 4.0, m0 = (3 * a + b) / 4.0, mid = (a + b) / 2.0;
      const double fl = integrand(g(m0)), fr = integrand(g(m1));
      const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
      const double left = (mid - a) / 6.0 * (fa + 4 * fl + fm);
      const double right = (b - mid) / 6.0 * (fm + 4 * fr + fb);
      if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
        return left + right + (left + right - whole) / 15.0;
      return simpson(a, mid, fa, fl, fm, eps / 2, depth - 1) +
             simpson(mid, b, fm, fr, fb, eps / 2, depth - 1);
    };
    const double fa = integrand(g(0.0)), fb = integrand(g(h)), fm = integrand(g(h / 2));
    total += simpson(0.0, h, fa, fm, fb, tol / (2 * N), 40);
  }
  return total;
}

EntropyReport q_entropy(const StepQueenon& q) {
  EntropyReport r;
  r.n_steps = q.n_steps();
  r.kl_square = kl_square(q);
  const auto [plus, minus] = diag_marginals(q);
  r.kl_plus = kl_diag(plus);
  r.kl_minus = kl_diag(minus);
  r.h_q = -r.kl_square - r.kl_plus - r.kl_minus + kTwoLog2Minus3;
  return r;
}

double q_entropy_discrete(const StepQueenon& q, int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("q_entropy_discrete: n_steps must be >= 1");
  const int L = std::lcm(q.n_steps(), n_steps);
  if (L > 4096)
    throw std::invalid_argument("q_entropy_discrete: resolution " +
                                std::to_string(n_steps) + " incompatible with queenon (lcm " +
                                std::to_string(L) + " too large)");
  const StepQueenon r = q.refined(L / q.n_steps());
  const int N = n_steps;
  const CellGeometry geom(N);
  const auto masses = cell_masses(r, N);
  double dn = 0.0;
  for (int k = 0; k < geom.cell_count(); ++k) {
    const double mass = masses[k];
    if (mass > kZeroDensity) dn += mass * std::log(mass / geom.area(geom.cells()[k]));
  }
  const auto [plus, minus] = diag_marginals(r);
  const int f = L / N;
  auto coarse_complements = [&](const DiagMarginal& m) {
    std::vector<double> p(2 * N, 0.0);
    for (int b = 0; b < 2 * L; ++b) p[b / f] += m.band_mass[b];
    for (int b = 0; b < 2 * N; ++b) p[b] = std::max(0.0, 1.0 / N - p[b]);
    return p;
  };
  const double dplus = discrete_kl(coarse_complements(plus));
  const double dminus = discrete_kl(coarse_complements(minus));
  return -dn - dplus - dminus + 2.0 * std::log(2.0) - 3.0;
}

double bw_entropy(const std::vector<double>& black_cells,
                  const std::vector<double>& white_cells, int n_steps, double tol) {
  const int N = n_steps;
  const CellGeometry geom(N);
  const std::size_t m = static_cast<std::size_t>(geom.cell_count());
  if (black_cells.size() != m || white_cells.size() != m)
    throw std::invalid_argument("bw_entropy: cell vectors must match I_N");
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (black_cells[k] < -tol || white_cells[k] < -tol)
      throw std::invalid_argument("bw_entropy: negative cell mass");
    total += black_cells[k] + white_cells[k];
  }
  if (std::abs(total - 1.0) > 1e-6)
    throw std::invalid_argument("bw_entropy: total mass " + std::to_string(total) +
                                " is not 1");
  // Per-band color masses and the half-capacity constraint.
  std::vector<double> band_plus(2 * N * 2, 0.0), band_minus(2 * N * 2, 0.0);
  for (int color = 0; color < 2; ++color) {
    const auto& cells = color == 0 ? black_cells : white_cells;
    for (std::size_t k = 0; k < m; ++k) {
      const CellId c = geom.cells()[k];
      band_plus[color * 2 * N + (c.u - 1)] += cells[k];
      band_minus[color * 2 * N + (c.v - 1)] += cells[k];
    }
  }
  const double cap = 1.0 / (2.0 * N);
  for (const auto& bands : {band_plus, band_minus})
    for (std::size_t k = 0; k < bands.size(); ++k)
      if (bands[k] > cap + tol)
        throw std::invalid_argument("bw_entropy: color band " + std::to_string(k % (2 * N) + 1) +
                                    " carries mass " + std::to_string(bands[k]) +
                                    " > 1/(2N)");
  double dn = 0.0;
  for (int color = 0; color < 2; ++color) {
    const auto& cells = color == 0 ? black_cells : white_cells;
    for (std::size_t k = 0; k < m; ++k)
      if (cells[k] > kZeroDensity)
        dn += cells[k] * std::log(2.0 * cells[k] / geom.area(geom.cells()[k]));
  }
  auto complement_kl = [&](const std::vector<double>& bands) {
    std::vector<double> p(bands.size());
    for (std::size_t k = 0; k < bands.size(); ++k) p[k] = std::max(0.0, cap - bands[k]);
    return discrete_kl(p);
  };
  return -dn - complement_kl(band_plus) - complement_kl(band_minus) +
         2.0 * std::log(2.0) - 3.0;
}

LogSumIdentity log_sum_identity(double b, int n, int T) {
  if (b <= 0.0 || b > 1.0) throw std::invalid_argument("log_sum_identity: b must be in (0,1]");
  if (n < 1) throw std::invalid_argument("log_sum_identity: n must be >= 1");
  const double lo = (1.0 - 1.0 / std::exp(1.0)) * n;
  if (T < lo || T >= n)
    throw std::invalid_argument("log_sum_identity: T must satisfy (1-1/e) n <= T < n");
  LogSumIdentity r;
  for (int t = 0; t < T; ++t) r.exact_sum += b * std::log(1.0 - b * t / n);
  r.closed_form = n * (-xlogx(1.0 - b) - b);  // (1-b)log(1-b) -> 0 as b -> 1
  r.bound = 2.0 * (n - T) * std::abs(std::log(1.0 - static_cast<double>(T) / n));
  return r;
}

LineSumReport line_sum_diagnostics(const StepQueenon& q, int n) {
  const int N = q.n_steps();
  if (n < N * N)
    throw std::invalid_argument("line_sum_diagnostics: requires n >= N^2 (n = " +
                                std::to_string(n) + ", N = " + std::to_string(N) + ")");
  const CellGeometry geom(N);
  // Assignment map and per-cell totals.
  std::vector<int> cell_of(static_cast<std::size_t>(n) * n);
  std::vector<std::int64_t> cell_total(geom.cell_count(), 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      const int idx = geom.cell_index(geom.assign(n, i, j));
      cell_of[(j - 1) * static_cast<std::size_t>(n) + (i - 1)] = idx;
      ++cell_total[idx];
    }
  const auto masses = cell_masses(q, N);
  std::vector<double> weight(geom.cell_count(), 0.0);
  for (int k = 0; k < geom.cell_count(); ++k)
    weight[k] = cell_total[k] > 0 ? masses[k] / static_cast<double>(cell_total[k]) : 0.0;

  const auto [plus, minus] = diag_marginals(q);
  LineSumReport rep;
  // Rows and the row-partition identity.
  for (int y = 1; y <= n; ++y) {
    double s = 0.0;
    std::int64_t cnt = 0;
    for (int x = 1; x <= n; ++x) {
      s += weight[cell_of[(y - 1) * static_cast<std::size_t>(n) + (x - 1)]];
      ++cnt;
    }
    if (cnt != n) rep.partition_consistent = false;
    rep.max_row_dev = std::max(rep.max_row_dev, std::abs(s - 1.0 / n));
  }
  for (int x = 1; x <= n; ++x) {
    double s = 0.0;
    for (int y = 1; y <= n; ++y)
      s += weight[cell_of[(y - 1) * static_cast<std::size_t>(n) + (x - 1)]];
    rep.max_col_dev = std::max(rep.max_col_dev, std::abs(s - 1.0 / n));
  }
  for (int c = 2; c <= 2 * n; ++c) {
    double s = 0.0;
    for (int x = std::max(1, c - n); x <= std::min(n, c - 1); ++x)
      s += weight[cell_of[(c - x - 1) * static_cast<std::size_t>(n) + (x - 1)]];
    const int band = plus_band_of_diagonal(N, n, c);
    const double expect = N * plus.band_mass[band - 1] / n;
    rep.max_plus_dev = std::max(rep.max_plus_dev, std::abs(s - expect));
  }
  for (int c = -(n - 1); c <= n - 1; ++c) {
    double s = 0.0;
    for (int x = std::max(1, 1 - c); x <= std::min(n, n - c); ++x)
      s += weight[cell_of[(x + c - 1) * static_cast<std::size_t>(n) + (x - 1)]];
    const int band = minus_band_of_diagonal(N, n, c);
    const double expect = N * minus.band_mass[band - 1] / n;
    rep.max_minus_dev = std::max(rep.max_minus_dev, std::abs(s - expect));
  }
  return rep;
}

}  // namespace queenon
