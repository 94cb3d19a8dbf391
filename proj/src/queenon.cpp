#include "queenon/queenon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace queenon {

StepQueenon StepQueenon::from_matrix(int n_steps, std::vector<double> density,
                                     double tol) {
  if (n_steps < 1) throw std::invalid_argument("from_matrix: n_steps must be >= 1");
  const std::size_t nn = static_cast<std::size_t>(n_steps) * n_steps;
  if (density.size() != nn)
    throw std::invalid_argument("from_matrix: density must have n_steps^2 entries");
  const int N = n_steps;
  auto at = [&](int i, int j) -> double& {
    return density[(j - 1) * static_cast<std::size_t>(N) + (i - 1)];
  };
  for (int j = 1; j <= N; ++j)
    for (int i = 1; i <= N; ++i) {
      if (at(i, j) < -tol)
        throw std::invalid_argument("from_matrix: negative density at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      if (at(i, j) < 0) at(i, j) = 0.0;
    }
  for (int j = 1; j <= N; ++j) {
    double s = 0.0;
    for (int i = 1; i <= N; ++i) s += at(i, j);
    if (std::abs(s - N) > tol * N)
      throw std::invalid_argument("from_matrix: row " + std::to_string(j) +
                                  " sums to " + std::to_string(s) + ", expected " +
                                  std::to_string(N));
  }
  for (int i = 1; i <= N; ++i) {
    double s = 0.0;
    for (int j = 1; j <= N; ++j) s += at(i, j);
    if (std::abs(s - N) > tol * N)
      throw std::invalid_argument("from_matrix: column " + std::to_string(i) +
                                  " sums to " + std::to_string(s) + ", expected " +
                                  std::to_string(N));
  }
  // Diagonal marginal densities: at breakpoint s = u/N - 1 the density of
  // gamma+ is (sum over i+j = u+1 of G_ij) / N, and similarly for minus.
  bool clamped = false;
  for (int u = 0; u <= 2 * N; ++u) {
    double s = 0.0;
    for (int i = std::max(1, u + 1 - N); i <= std::min(N, u); ++i) s += at(i, u + 1 - i);
    if (s > N * (1.0 + tol))
      throw std::invalid_argument("from_matrix: plus-diagonal " + std::to_string(u) +
                                  " sums to " + std::to_string(s) +
                                  " > n_steps (diagonal marginal not sub-uniform)");
    if (s > N) clamped = true;
  }
  for (int v = 0; v <= 2 * N; ++v) {
    const int k = v - N;  // j - i
    double s = 0.0;
    for (int i = std::max(1, 1 - k); i <= std::min(N, N - k); ++i) s += at(i, i + k);
    if (s > N * (1.0 + tol))
      throw std::invalid_argument("from_matrix: minus-diagonal " + std::to_string(v) +
                                  " sums to " + std::to_string(s) +
                                  " > n_steps (diagonal marginal not sub-uniform)");
    if (s > N) clamped = true;
  }
  StepQueenon q;
  q.n_ = N;
  q.g_ = std::move(density);
  q.clamped_ = clamped;
  return q;
}

StepQueenon StepQueenon::refined(int factor) const {
  if (factor < 1) throw std::invalid_argument("refined: factor must be >= 1");
  if (factor == 1) return *this;
  const int L = n_ * factor;
  std::vector<double> g(static_cast<std::size_t>(L) * L);
  for (int j = 1; j <= L; ++j)
    for (int i = 1; i <= L; ++i)
      g[(j - 1) * static_cast<std::size_t>(L) + (i - 1)] =
          density((i - 1) / factor + 1, (j - 1) / factor + 1);
  return from_matrix(L, std::move(g), 1e-9);
}

StepQueenon uniform_queenon(int n_steps) {
  return StepQueenon::from_matrix(
      n_steps, std::vector<double>(static_cast<std::size_t>(n_steps) * n_steps, 1.0));
}

StepQueenon kappa_queenon() {
  return StepQueenon::from_matrix(
      3, {0.9, 1.2, 0.9, 1.2, 0.6, 1.2, 0.9, 1.2, 0.9});
}

StepQueenon mix(const StepQueenon& a, const StepQueenon& b, double rho) {
  if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("mix: rho must be in [0,1]");
  const int L = std::lcm(a.n_steps(), b.n_steps());
  if (L > 4096)
    throw std::invalid_argument("mix: incompatible resolutions (lcm " +
                                std::to_string(L) + " too large)");
  const StepQueenon ar = a.refined(L / a.n_steps());
  const StepQueenon br = b.refined(L / b.n_steps());
  std::vector<double> g(ar.grid().size());
  for (std::size_t k = 0; k < g.size(); ++k)
    g[k] = (1.0 - rho) * ar.grid()[k] + rho * br.grid()[k];
  return StepQueenon::from_matrix(L, std::move(g));
}

std::pair<DiagMarginal, DiagMarginal> diag_marginals(const StepQueenon& q) {
  const int N = q.n_steps();
  DiagMarginal plus, minus;
  plus.direction = DiagMarginal::Direction::plus;
  minus.direction = DiagMarginal::Direction::minus;
  plus.n_steps = minus.n_steps = N;
  plus.density_breakpoints.assign(2 * N + 1, 0.0);
  minus.density_breakpoints.assign(2 * N + 1, 0.0);
  for (int u = 0; u <= 2 * N; ++u) {
    double s = 0.0;
    for (int i = std::max(1, u + 1 - N); i <= std::min(N, u); ++i)
      s += q.density(i, u + 1 - i);
    plus.density_breakpoints[u] = s / N;
  }
  for (int v = 0; v <= 2 * N; ++v) {
    const int k = v - N;
    double s = 0.0;
    for (int i = std::max(1, 1 - k); i <= std::min(N, N - k); ++i)
      s += q.density(i, i + k);
    minus.density_breakpoints[v] = s / N;
  }
  for (DiagMarginal* m : {&plus, &minus}) {
    m->band_mass.assign(2 * N, 0.0);
    m->complement_mass.assign(2 * N, 0.0);
    for (int b = 1; b <= 2 * N; ++b) {
      const double mass =
          (m->density_breakpoints[b - 1] + m->density_breakpoints[b]) / (2.0 * N);
      m->band_mass[b - 1] = mass;
      m->complement_mass[b - 1] = std::max(0.0, 1.0 / N - mass);
    }
  }
  return {plus, minus};
}

std::vector<double> triangle_masses(const StepQueenon& q) {
  const int N = q.n_steps();
  std::vector<double> out(static_cast<std::size_t>(4) * N * N);
  const double scale = 1.0 / (4.0 * N * N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      const double m = q.density(i, j) * scale;
      for (int c = 0; c < 4; ++c)
        out[CellGeometry::triangle_index(N, i, j, static_cast<TriCorner>(c))] = m;
    }
  return out;
}

std::vector<double> cell_masses(const StepQueenon& q, int coarse_steps) {
  const int L = q.n_steps();
  if (coarse_steps < 1 || L % coarse_steps != 0)
    throw std::invalid_argument("cell_masses: coarse_steps " +
                                std::to_string(coarse_steps) + " does not divide " +
                                std::to_string(L));
  const int m = L / coarse_steps;
  const CellGeometry fine(L);
  const CellGeometry coarse(coarse_steps);
  const auto tm = triangle_masses(q);
  std::vector<double> out(coarse.cell_count(), 0.0);
  const auto& tris = fine.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const CellId fc = tris[t].cell;
    const CellId cc{(fc.u + m - 1) / m, (fc.v + m - 1) / m};
    const int idx = coarse.cell_index(cc);
    if (idx < 0) throw std::logic_error("cell_masses: fine triangle in empty coarse cell");
    out[idx] += tm[t];
  }
  return out;
}

std::vector<double> sd_grid_masses(const StepQueenon& q, int grid_steps) {
  if (grid_steps < 1 || grid_steps % q.n_steps() != 0)
    throw std::invalid_argument("sd_grid_masses: queenon resolution " +
                                std::to_string(q.n_steps()) + " does not divide grid " +
                                std::to_string(grid_steps));
  const StepQueenon r = q.refined(grid_steps / q.n_steps());
  const int L = grid_steps;
  std::vector<double> w(static_cast<std::size_t>(2 * L) * (2 * L), 0.0);
  const CellGeometry geom(L);
  const auto tm = triangle_masses(r);
  const auto& tris = geom.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const CellId c = tris[t].cell;
    w[(c.u - 1) * static_cast<std::size_t>(2 * L) + (c.v - 1)] += tm[t];
  }
  return w;
}

EmpiricalMeasure empirical(const std::vector<Position>& config, int n, int n_steps) {
  board_from_config(n, config);  // validates
  const CellGeometry geom(n_steps);
  EmpiricalMeasure em;
  em.n = n;
  em.n_steps = n_steps;
  em.config = config;
  em.cell_counts.assign(geom.cell_count(), 0);
  for (Position p : config) ++em.cell_counts[geom.cell_index(geom.assign(n, p.x, p.y))];
  return em;
}

StepQueenon config_queenon(const std::vector<Position>& config, int n) {
  BoardState b = board_from_config(n, config);
  if (b.queen_count() != n)
    throw std::invalid_argument("config_queenon: configuration is not complete");
  std::vector<double> g(static_cast<std::size_t>(n) * n, 0.0);
  for (Position p : config) g[(p.y - 1) * static_cast<std::size_t>(n) + (p.x - 1)] = n;
  return StepQueenon::from_matrix(n, std::move(g));
}

DistBracket dist_step(const StepQueenon& a, const StepQueenon& b, int grid_steps) {
  if (grid_steps < std::max(a.n_steps(), b.n_steps()))
    throw std::invalid_argument("dist_step: grid must be at least the max resolution");
  const auto wa = sd_grid_masses(a, grid_steps);
  const auto wb = sd_grid_masses(b, grid_steps);
  const int L = 2 * grid_steps;
  // Prefix sums of the signed difference over the diamond grid.
  std::vector<double> pre(static_cast<std::size_t>(L + 1) * (L + 1), 0.0);
  for (int u = 1; u <= L; ++u)
    for (int v = 1; v <= L; ++v) {
      const std::size_t k = (u - 1) * static_cast<std::size_t>(L) + (v - 1);
      pre[u * static_cast<std::size_t>(L + 1) + v] =
          wa[k] - wb[k] + pre[(u - 1) * static_cast<std::size_t>(L + 1) + v] +
          pre[u * static_cast<std::size_t>(L + 1) + (v - 1)] -
          pre[(u - 1) * static_cast<std::size_t>(L + 1) + (v - 1)];
    }
  double lower = 0.0;
  for (int u1 = 0; u1 < L; ++u1)
    for (int u2 = u1 + 1; u2 <= L; ++u2) {
      double fmin = 0.0, fmax = 0.0;  // f(0) = 0
      for (int v = 1; v <= L; ++v) {
        const double f = pre[u2 * static_cast<std::size_t>(L + 1) + v] -
                         pre[u1 * static_cast<std::size_t>(L + 1) + v];
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
      }
      lower = std::max(lower, fmax - fmin);
    }
  return {lower, lower + 4.0 / grid_steps};
}

double dist_cell_bound(double eps, int n_steps) {
  if (eps < 0) throw std::invalid_argument("dist_cell_bound: eps must be >= 0");
  return 8.0 / n_steps + 4.0 * n_steps * n_steps * eps;
}

double dist_cell_bound_config(const std::vector<int>& counts1,
                              const std::vector<int>& counts2, int n_steps, int n) {
  if (counts1.size() != counts2.size())
    throw std::invalid_argument("dist_cell_bound_config: mismatched cell geometries");
  int worst = 0;
  for (std::size_t k = 0; k < counts1.size(); ++k)
    worst = std::max(worst, std::abs(counts1[k] - counts2[k]));
  const double eps = static_cast<double>(worst) / n;
  return 4.0 * n_steps * n_steps * (eps + 8.0 / n) + 8.0 / n_steps;
}

}  // namespace queenon
