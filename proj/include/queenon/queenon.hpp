#pragma once

#include <utility>
#include <vector>

#include "queenon/board.hpp"
#include "queenon/geometry.hpp"

namespace queenon {

// N-step queenon: a probability measure on [-1/2,1/2]^2 with piecewise
// constant density on the axis grid {sigma_ij^N}, uniform row/column
// marginals and sub-uniform diagonal marginals. The density matrix is the
// canonical representation; I_N / J_N / K_N masses are always derived from
// it by exact triangle decomposition.
class StepQueenon {
 public:
  // density is row-major by y-strip: density[(j-1)*N + (i-1)] is the value on
  // sigma_{i,j} (x-strip i, y-strip j). Validates:
  //   - entries nonnegative,
  //   - every row and column of the density matrix sums to N (mass 1/N per
  //     axis strip), within tol,
  //   - every matrix diagonal sums to at most N within N*tol (equivalently
  //     the piecewise-linear diagonal marginal densities stay <= 1, which
  //     makes every diagonal strip's mass at most its width), which also
  //     bounds every J_N band mass by 1/N.
  // Throws naming the first offending row/column/diagonal otherwise.
  static StepQueenon from_matrix(int n_steps, std::vector<double> density,
                                 double tol = 1e-9);

  int n_steps() const { return n_; }
  double density(int i, int j) const { return g_[(j - 1) * static_cast<std::size_t>(n_) + (i - 1)]; }
  const std::vector<double>& grid() const { return g_; }
  // True if some band mass exceeded 1/N by at most tol and the complement
  // was clamped to 0.
  bool band_clamped() const { return clamped_; }

  // The same measure on a grid refined by an integer factor. Exact.
  StepQueenon refined(int factor) const;

 private:
  StepQueenon() = default;
  int n_ = 0;
  std::vector<double> g_;
  bool clamped_ = false;
};

StepQueenon uniform_queenon(int n_steps);
// The 3x3 bump measure used to smooth construction inputs.
StepQueenon kappa_queenon();

// (1-rho) a + rho b on the common (lcm) grid. rho in [0,1].
StepQueenon mix(const StepQueenon& a, const StepQueenon& b, double rho);

// Pushforward of the measure under x+y (plus) or y-x (minus), plus the
// per-band complement to the uniform measure. The density of gamma± is
// piecewise linear with breakpoints at multiples of 1/N.
struct DiagMarginal {
  enum class Direction { plus, minus };
  Direction direction = Direction::plus;
  int n_steps = 0;
  std::vector<double> band_mass;           // 2N entries, each in [0, 1/N]
  std::vector<double> complement_mass;     // 1/N - band_mass, clamped at 0
  std::vector<double> density_breakpoints; // 2N+1 values of the density at k/N - 1
};

std::pair<DiagMarginal, DiagMarginal> diag_marginals(const StepQueenon& q);

// Mass of each K_N triangle, indexed like CellGeometry(N).triangles():
// G_ij / (4N^2) for the parent axis square.
std::vector<double> triangle_masses(const StepQueenon& q);

// Exact I_N' cell masses (indexed like CellGeometry(coarse_steps).cells()).
// coarse_steps must divide q.n_steps().
std::vector<double> cell_masses(const StepQueenon& q, int coarse_steps);

// Masses of the full 2L x 2L diamond grid (s-band x d-band boxes clipped to
// the square), row-major by s-band. Both resolutions must divide grid_steps.
std::vector<double> sd_grid_masses(const StepQueenon& q, int grid_steps);

// Empirical measure of a configuration: per-I_N-cell queen counts under the
// minimal-lexicographic-center assignment rule.
struct EmpiricalMeasure {
  int n = 0;
  int n_steps = 0;
  std::vector<Position> config;
  std::vector<int> cell_counts;  // indexed like CellGeometry(n_steps).cells()
};

EmpiricalMeasure empirical(const std::vector<Position>& config, int n, int n_steps);

// The step queenon gamma_q of a complete configuration (density n on queened
// squares).
StepQueenon config_queenon(const std::vector<Position>& config, int n);

// Bracket for the diagonal-rectangle discrepancy metric: lower is the exact
// supremum over rectangles with boundaries on the (1/L)-grid; the true
// supremum is at most lower + 4/L because snapping each of the four
// boundaries moves it by at most 1/(2L) and diagonal strips carry mass at
// most their width.
struct DistBracket {
  double lower = 0.0;
  double upper = 0.0;
};

DistBracket dist_step(const StepQueenon& a, const StepQueenon& b, int grid_steps);

// Certified metric bound from per-cell gaps: 8/N + 4 N^2 eps for step
// queenons with every I_N cell gap below eps.
double dist_cell_bound(double eps, int n_steps);
// Configuration form: eps = max normalized count gap, bound
// 4N^2 (eps + 8/n) + 8/N.
double dist_cell_bound_config(const std::vector<int>& counts1,
                              const std::vector<int>& counts2, int n_steps, int n);

}  // namespace queenon
