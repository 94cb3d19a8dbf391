#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "queenon/queenon.hpp"

namespace queenon {

// The finite-dimensional entropy maximization whose value bounds the optimal
// q-entropy from above. Variables live on Omega = K_N (4N^2 triangle masses)
// followed by J_N^1 (2N plus complement masses) and J_N^2 (2N minus
// complement masses). Constraints: N column strips, N row strips, 2N
// plus-band equations, 2N minus-band equations; right-hand side 1/N each.
// Every triangle column of A has exactly 4 unit entries, every band column
// exactly 1.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(int n_steps);

  int n_steps() const { return n_; }
  int num_rows() const { return 6 * n_; }                  // 6N
  int omega_size() const { return 4 * n_ * n_ + 4 * n_; }  // 4N^2 + 4N

  // Rows touched by variable column k (4 for triangles, 1 for bands).
  const std::vector<std::vector<int>>& columns() const { return cols_; }

  // (y^T A)_k for every column.
  std::vector<double> apply_transpose(const std::vector<double>& y) const;
  // A x.
  std::vector<double> apply(const std::vector<double>& x) const;
  // b (all entries 1/N).
  std::vector<double> rhs() const;

  // The feasible point of a step queenon at resolution N: triangle masses
  // followed by complement band masses. Throws if the queenon's resolution
  // differs from N or the point misses A x = b beyond tol.
  std::vector<double> primal_feasible_from(const StepQueenon& q, double tol = 1e-9) const;

  // True if every coordinate lies strictly inside (0, 1/N); boundary entries
  // (zero density cells) are legal for the objective but flagged.
  bool strictly_interior(const std::vector<double>& x) const;

 private:
  int n_;
  std::vector<std::vector<int>> cols_;
};

// f(x) = -sum x log x - 4 log(2N) + 2 log 2 - 3 on the closure of
// (0, 1/N)^Omega. Throws on negative entries.
double objective_f(const std::vector<double>& x, int n_steps);

struct DualVector {
  std::vector<double> y;  // length 6N
};

// Admissibility margin: max over columns of (y^T A)_k - 1 + log N. The
// closed form for the dual requires this to be <= 0.
double dual_margin(const DualVector& y, const ConstraintSystem& sys);

struct DualEvaluation {
  double value = 0.0;            // L(y)
  std::vector<double> gradient;  // A x~ - b
  std::vector<double> x_tilde;   // exp((y^T A)_k - 1)
};

// L(y) = f(x~) + y^T (A x~ - b) with x~ = exp(y^T A - 1). Throws if y is
// inadmissible (e.g. y = 0 for N >= 3).
DualEvaluation dual_value(const DualVector& y, const ConstraintSystem& sys);

struct Certificate {
  std::string kind;  // "lower" or "upper"
  int n_steps = 0;
  double value = 0.0;
  // lower: density matrix of the witness queenon; upper: dual vector y.
  std::vector<double> witness;
};

// Recompute the certified value from the witness; throws if it differs from
// the stored value by more than tol or the witness is invalid/inadmissible.
void verify_certificate(const Certificate& cert, double tol = 1e-9);

struct DualSolveOptions {
  int budget = 200000;          // gradient evaluations
  double initial_step = 1.0;
  double armijo = 1e-4;
  bool verbose = false;
};

// Projected gradient descent with Armijo backtracking on the smooth convex
// dual, keeping iterates admissible by step shrinking. Deterministic.
// Default start: the admissible constant y = -log N.
Certificate minimize_dual(int n_steps, std::optional<DualVector> init,
                          const DualSolveOptions& opts = {});

struct PrimalSolveOptions {
  int budget = 0;  // ascent iterations; 0 evaluates the start point only
  std::uint64_t seed = 0;
  bool verbose = false;
};

// Heuristic projected ascent over N-step density matrices (finite-difference
// gradient steps, Sinkhorn renormalization of the marginals, capping of
// over-full diagonals). Every emitted certificate is re-validated through
// from_matrix, so the value is a sound lower bound regardless of how far the
// ascent got. Default start: uniform, or the printed 12x12 matrix at N = 12.
Certificate maximize_primal(int n_steps, std::optional<StepQueenon> init,
                            const PrimalSolveOptions& opts = {});

// The explicit 12x12 density matrix from the lower-bound certificate,
// entries given to two decimal digits.
StepQueenon a12_matrix();

}  // namespace queenon
