#pragma once

#include <vector>

#include "queenon/queenon.hpp"

namespace queenon {

// Entropy functionals. All KL divergences are against the uniform measure on
// the relevant domain and use natural logarithm; 0 log 0 = 0 throughout.

struct EntropyReport {
  int n_steps = 0;
  double kl_square = 0.0;  // D_KL(gamma || uniform on the square)
  double kl_plus = 0.0;    // D_KL(complement plus marginal || uniform on [-1,1])
  double kl_minus = 0.0;
  double h_q = 0.0;        // -kl_square - kl_plus - kl_minus + 2 log 2 - 3
};

// Sum over cells of (G_ij / N^2) log(G_ij).
double kl_square(const StepQueenon& q);

// KL of the complement marginal against uniform density 1/2 on [-1,1]:
// the exact integral of (1-g) log(2(1-g)) where g is the piecewise-linear
// marginal density. Closed form per linear piece.
double kl_diag(const DiagMarginal& m);
// Adaptive-quadrature evaluation of the same integral (verification path).
double kl_diag_quadrature(const DiagMarginal& m, double tol = 1e-12);

EntropyReport q_entropy(const StepQueenon& q);

// Discrete q-entropy at resolution N: -D^N - D(plus bands) - D(minus bands)
// + 2 log 2 - 3, computed exactly on the lcm grid of q and N.
double q_entropy_discrete(const StepQueenon& q, int n_steps);

// BW-decomposition entropy G^N. Inputs are I_N cell-mass vectors of the two
// color parts (indexed like CellGeometry(N).cells()); their sum must be a
// probability vector and every J_N band must carry mass at most 1/(2N) in
// each color. G^N(g/2, g/2) equals the discrete q-entropy of g.
double bw_entropy(const std::vector<double>& black_cells,
                  const std::vector<double>& white_cells, int n_steps,
                  double tol = 1e-9);

// The telescoped placement-probability sum and its closed-form approximation:
// exact_sum = sum_{t<T} b log(1 - b t / n), closed_form = n(-(1-b)log(1-b) - b),
// |exact - closed| <= bound = 2 (n-T) |log(1 - T/n)| whenever
// (1-1/e) n <= T < n.
struct LogSumIdentity {
  double exact_sum = 0.0;
  double closed_form = 0.0;
  double bound = 0.0;
};

LogSumIdentity log_sum_identity(double b, int n, int T);

// Weighted line-sum diagnostics for an N-step queenon realized on an n x n
// board: for every row y the sum over cells of gamma(alpha) L^r_{y,alpha} /
// |alpha_n| should be close to 1/n, and for every diagonal the analogous sum
// should be close to N gamma±(band) / n.
struct LineSumReport {
  double max_row_dev = 0.0;    // max over rows of |sum - 1/n|
  double max_col_dev = 0.0;
  double max_plus_dev = 0.0;   // max over plus-diagonals of |sum - N gamma+(band)/n|
  double max_minus_dev = 0.0;
  // Per-row partition check: sum over cells of L^r_{y,alpha} equals n.
  bool partition_consistent = true;
};

LineSumReport line_sum_diagnostics(const StepQueenon& q, int n);

}  // namespace queenon
