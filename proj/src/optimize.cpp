#include "queenon/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "queenon/entropy.hpp"
#include "queenon/rng.hpp"

namespace queenon {

namespace {

constexpr double kZero = 1e-15;

const int kA12[12][12] = {
    {59, 76, 95, 113, 125, 132, 132, 125, 113, 95, 76, 59},
    {76, 87, 99, 108, 114, 116, 116, 114, 108, 99, 87, 76},
    {95, 99, 100, 102, 102, 102, 102, 102, 102, 100, 99, 95},
    {113, 108, 102, 94, 92, 91, 91, 92, 94, 102, 108, 113},
    {125, 114, 102, 92, 85, 82, 82, 85, 92, 102, 114, 125},
    {132, 116, 102, 91, 82, 77, 77, 82, 91, 102, 116, 132},
    {132, 116, 102, 91, 82, 77, 77, 82, 91, 102, 116, 132},
    {125, 114, 102, 92, 85, 82, 82, 85, 92, 102, 114, 125},
    {113, 108, 102, 94, 92, 91, 91, 92, 94, 102, 108, 113},
    {95, 99, 100, 102, 102, 102, 102, 102, 102, 100, 99, 95},
    {76, 87, 99, 108, 114, 116, 116, 114, 108, 99, 87, 76},
    {59, 76, 95, 113, 125, 132, 132, 125, 113, 95, 76, 59}};

}  // namespace

ConstraintSystem::ConstraintSystem(int n_steps) : n_(n_steps) {
  if (n_steps < 2) throw std::invalid_argument("ConstraintSystem: n_steps must be >= 2");
  const int N = n_;
  const CellGeometry geom(N);
  cols_.reserve(omega_size());
  for (const Triangle& t : geom.triangles()) {
    // column strip i, row strip j, plus band u, minus band v
    cols_.push_back({t.i - 1, N + t.j - 1, 2 * N + t.cell.u - 1, 4 * N + t.cell.v - 1});
  }
  for (int u = 1; u <= 2 * N; ++u) cols_.push_back({2 * N + u - 1});
  for (int v = 1; v <= 2 * N; ++v) cols_.push_back({4 * N + v - 1});
}

std::vector<double> ConstraintSystem::apply_transpose(const std::vector<double>& y) const {
  if (y.size() != static_cast<std::size_t>(num_rows()))
    throw std::invalid_argument("apply_transpose: y must have 6N entries");
  std::vector<double> out(cols_.size());
  for (std::size_t k = 0; k < cols_.size(); ++k) {
    double s = 0.0;
    for (int r : cols_[k]) s += y[r];
    out[k] = s;
  }
  return out;
}

std::vector<double> ConstraintSystem::apply(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(omega_size()))
    throw std::invalid_argument("apply: x must have |Omega| entries");
  std::vector<double> out(num_rows(), 0.0);
  for (std::size_t k = 0; k < cols_.size(); ++k)
    for (int r : cols_[k]) out[r] += x[k];
  return out;
}

std::vector<double> ConstraintSystem::rhs() const {
  return std::vector<double>(num_rows(), 1.0 / n_);
}

std::vector<double> ConstraintSystem::primal_feasible_from(const StepQueenon& q,
                                                           double tol) const {
  if (q.n_steps() != n_)
    throw std::invalid_argument("primal_feasible_from: queenon resolution " +
                                std::to_string(q.n_steps()) + " != " + std::to_string(n_));
  std::vector<double> x = triangle_masses(q);
  const auto [plus, minus] = diag_marginals(q);
  x.insert(x.end(), plus.complement_mass.begin(), plus.complement_mass.end());
  x.insert(x.end(), minus.complement_mass.begin(), minus.complement_mass.end());
  const auto ax = apply(x);
  for (int r = 0; r < num_rows(); ++r)
    if (std::abs(ax[r] - 1.0 / n_) > tol)
      throw std::invalid_argument("primal_feasible_from: constraint " + std::to_string(r) +
                                  " violated by " + std::to_string(ax[r] - 1.0 / n_));
  return x;
}

bool ConstraintSystem::strictly_interior(const std::vector<double>& x) const {
  for (double v : x)
    if (v <= 0.0 || v >= 1.0 / n_) return false;
  return true;
}

double objective_f(const std::vector<double>& x, int n_steps) {
  double s = 0.0;
  for (double v : x) {
    if (v < -1e-12) throw std::invalid_argument("objective_f: negative entry");
    if (v > kZero) s += v * std::log(v);
  }
  return -s - 4.0 * std::log(2.0 * n_steps) + 2.0 * std::log(2.0) - 3.0;
}

double dual_margin(const DualVector& y, const ConstraintSystem& sys) {
  const auto ya = sys.apply_transpose(y.y);
  double m = -1e300;
  for (double v : ya) m = std::max(m, v - 1.0 + std::log(static_cast<double>(sys.n_steps())));
  return m;
}

DualEvaluation dual_value(const DualVector& y, const ConstraintSystem& sys) {
  const double margin = dual_margin(y, sys);
  if (margin > 1e-12)
    throw std::invalid_argument(
        "dual_value: inadmissible multiplier (max (y^T A)_k - 1 + log N = " +
        std::to_string(margin) + " > 0)");
  const auto ya = sys.apply_transpose(y.y);
  DualEvaluation ev;
  ev.x_tilde.resize(ya.size());
  double f = 0.0;
  for (std::size_t k = 0; k < ya.size(); ++k) {
    const double x = std::exp(ya[k] - 1.0);
    ev.x_tilde[k] = x;
    f += -x * (ya[k] - 1.0);  // -x log x
  }
  f += -4.0 * std::log(2.0 * sys.n_steps()) + 2.0 * std::log(2.0) - 3.0;
  auto ax = sys.apply(ev.x_tilde);
  const double b = 1.0 / sys.n_steps();
  double yg = 0.0;
  ev.gradient.resize(ax.size());
  for (std::size_t r = 0; r < ax.size(); ++r) {
    ev.gradient[r] = ax[r] - b;
    yg += y.y[r] * ev.gradient[r];
  }
  ev.value = f + yg;
  return ev;
}

void verify_certificate(const Certificate& cert, double tol) {
  if (cert.kind == "lower") {
    const int N = cert.n_steps;
    const StepQueenon q = StepQueenon::from_matrix(N, cert.witness);
    const double h = q_entropy(q).h_q;
    if (std::abs(h - cert.value) > tol)
      throw std::invalid_argument("certificate: stored value " + std::to_string(cert.value) +
                                  " differs from recomputed H_q " + std::to_string(h));
  } else if (cert.kind == "upper") {
    const ConstraintSystem sys(cert.n_steps);
    DualVector y{cert.witness};
    const double v = dual_value(y, sys).value;  // throws if inadmissible
    if (std::abs(v - cert.value) > tol)
      throw std::invalid_argument("certificate: stored value " + std::to_string(cert.value) +
                                  " differs from recomputed L(y) " + std::to_string(v));
  } else {
    throw std::invalid_argument("certificate: unknown kind '" + cert.kind + "'");
  }
}

Certificate minimize_dual(int n_steps, std::optional<DualVector> init,
                          const DualSolveOptions& opts) {
  const ConstraintSystem sys(n_steps);
  DualVector y;
  if (init) {
    y = *init;
    if (y.y.size() != static_cast<std::size_t>(sys.num_rows()))
      throw std::invalid_argument("minimize_dual: init must have 6N entries");
  } else {
    y.y.assign(sys.num_rows(), -std::log(static_cast<double>(n_steps)));
  }
  DualEvaluation ev = dual_value(y, sys);
  int evals = 1;
  double step = opts.initial_step;
  DualVector best_y = y;
  double best = ev.value;
  while (evals < opts.budget) {
    double gn2 = 0.0;
    for (double g : ev.gradient) gn2 += g * g;
    if (gn2 < 1e-26) break;
    bool accepted = false;
    while (evals < opts.budget) {
      DualVector cand;
      cand.y.resize(y.y.size());
      for (std::size_t r = 0; r < y.y.size(); ++r) cand.y[r] = y.y[r] - step * ev.gradient[r];
      ++evals;
      if (dual_margin(cand, sys) <= 0.0) {
        const DualEvaluation ev2 = dual_value(cand, sys);
        if (ev2.value <= ev.value - opts.armijo * step * gn2) {
          y = cand;
          ev = ev2;
          accepted = true;
          step *= 1.3;
          break;
        }
      }
      step *= 0.5;
      if (step < 1e-18) break;
    }
    if (!accepted) break;
    if (ev.value < best) {
      best = ev.value;
      best_y = y;
    }
    if (opts.verbose && evals % 1000 < 2)
      std::fprintf(stderr, "dual N=%d evals=%d L=%.9f\n", n_steps, evals, ev.value);
  }
  Certificate cert;
  cert.kind = "upper";
  cert.n_steps = n_steps;
  cert.value = dual_value(best_y, sys).value;
  cert.witness = best_y.y;
  return cert;
}

StepQueenon a12_matrix() {
  std::vector<double> g(144);
  for (int j = 1; j <= 12; ++j)
    for (int i = 1; i <= 12; ++i) g[(j - 1) * 12 + (i - 1)] = kA12[j - 1][i - 1] / 100.0;
  return StepQueenon::from_matrix(12, std::move(g));
}

namespace {

// Alternating renormalization: Sinkhorn scaling toward row/column sums N,
// with over-full matrix diagonals damped toward the cap first.
std::vector<double> reproject(std::vector<double> g, int N, int rounds) {
  auto at = [&](int i, int j) -> double& { return g[(j - 1) * static_cast<std::size_t>(N) + (i - 1)]; };
  for (int round = 0; round < rounds; ++round) {
    // Cap diagonal sums at N with a small safety margin.
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = (pass == 0 ? 2 : 1 - N); c <= (pass == 0 ? 2 * N : N - 1); ++c) {
        double s = 0.0;
        const int lo = pass == 0 ? std::max(1, c - N) : std::max(1, 1 - c);
        const int hi = pass == 0 ? std::min(N, c - 1) : std::min(N, N - c);
        for (int i = lo; i <= hi; ++i) s += pass == 0 ? at(i, c - i) : at(i, i + c);
        const double cap = N * (1.0 - 1e-12);
        if (s > cap) {
          const double f = cap / s;
          for (int i = lo; i <= hi; ++i) (pass == 0 ? at(i, c - i) : at(i, i + c)) *= f;
        }
      }
    }
    // One Sinkhorn sweep.
    for (int j = 1; j <= N; ++j) {
      double s = 0.0;
      for (int i = 1; i <= N; ++i) s += at(i, j);
      if (s > 0)
        for (int i = 1; i <= N; ++i) at(i, j) *= N / s;
    }
    for (int i = 1; i <= N; ++i) {
      double s = 0.0;
      for (int j = 1; j <= N; ++j) s += at(i, j);
      if (s > 0)
        for (int j = 1; j <= N; ++j) at(i, j) *= N / s;
    }
  }
  return g;
}

std::optional<StepQueenon> try_validate(const std::vector<double>& g, int N) {
  try {
    return StepQueenon::from_matrix(N, g);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

Certificate maximize_primal(int n_steps, std::optional<StepQueenon> init,
                            const PrimalSolveOptions& opts) {
  const int N = n_steps;
  if (N < 2) throw std::invalid_argument("maximize_primal: n_steps must be >= 2");
  StepQueenon current = init ? *init : (N == 12 ? a12_matrix() : uniform_queenon(N));
  if (current.n_steps() != N)
    throw std::invalid_argument("maximize_primal: init resolution mismatch");
  double best = q_entropy(current).h_q;
  StepQueenon best_q = current;

  // Ascend the composite map density -> reproject -> H_q with a
  // forward-difference gradient; soundness comes from the from_matrix
  // validation of the accepted iterates, not from the ascent itself.
  auto project_entropy =
      [&](const std::vector<double>& m) -> std::pair<double, std::optional<StepQueenon>> {
    auto q = try_validate(reproject(m, N, 12), N);
    if (!q) return {-1e9, std::nullopt};
    return {q_entropy(*q).h_q, q};
  };
  double step = 0.05;
  std::vector<double> g = current.grid();
  for (int iter = 0; iter < opts.budget; ++iter) {
    const double fd = 1e-5;
    const double base = project_entropy(g).first;
    std::vector<double> grad(g.size(), 0.0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<double> gp = g;
      gp[k] += fd;
      const double fp = project_entropy(gp).first;
      grad[k] = (fp > -1e8 && base > -1e8) ? (fp - base) / fd : 0.0;
    }
    double gnorm = 0.0;
    for (double v : grad) gnorm += v * v;
    gnorm = std::sqrt(gnorm);
    if (gnorm < 1e-12) break;
    bool improved = false;
    for (int attempt = 0; attempt < 10 && !improved; ++attempt) {
      std::vector<double> cand = g;
      for (std::size_t k = 0; k < g.size(); ++k)
        cand[k] = std::max(0.0, cand[k] + step * grad[k] / gnorm);
      const auto [val, q] = project_entropy(cand);
      if (q && val > best + 1e-12) {
        best = val;
        best_q = *q;
        g = q->grid();
        improved = true;
        step *= 1.5;
        if (opts.verbose)
          std::fprintf(stderr, "primal N=%d iter=%d H_q=%.9f\n", N, iter, best);
      } else {
        step *= 0.5;
      }
    }
    if (!improved && step < 1e-10) break;
  }
  Certificate cert;
  cert.kind = "lower";
  cert.n_steps = N;
  cert.value = q_entropy(best_q).h_q;
  cert.witness = best_q.grid();
  return cert;
}

}  // namespace queenon
