#pragma once

// Numerical estimates of inf |f - g| over degree classes.  Phases are
// truncated Fourier series with fixed winding; the search is Nelder-Mead over
// a growing set of modes followed by a finite-difference L-BFGS polish, with
// deterministic random restarts.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hg/analytic_map.hpp"
#include "hg/grid_core.hpp"

namespace hg {

/// psi(theta) = winding * theta + c0 + sum_k (a_k cos k theta + b_k sin k theta).
struct PhaseAnsatz {
  int winding = 0;
  double c0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t modes() const { return a.size(); }
  /// Phase and derivative on the uniform M-grid.
  void evaluate(std::size_t M, std::vector<double>& psi, std::vector<double>& dpsi) const;
  CircleMap exponentiate(std::size_t M) const;
  /// Least-squares projection of (values - winding * theta) onto K modes.
  static PhaseAnsatz project(std::span<const double> values, int winding, std::size_t K);
};

struct OptimizeBudget {
  int modes = 32;
  int restarts = 8;
  /// Iterations per restart, shared by the simplex stages and the polish.
  int iterations = 2000;
  std::uint64_t seed = 0;
  std::size_t grid = 1024;

  OptimizeBudget scaled(int factor) const {
    OptimizeBudget b = *this;
    b.modes *= factor;
    b.iterations *= factor;
    return b;
  }
};

struct TracePoint {
  int restart = 0;
  int iteration = 0;
  double value = 0.0;
};

struct OptimizeReport {
  /// min(optimizer_value, witness_value).
  double best_value = std::numeric_limits<double>::infinity();
  /// Best value reached by the search itself.
  double optimizer_value = std::numeric_limits<double>::infinity();
  /// Distance of the gallery construction for the same classes (NaN if none).
  double witness_value = std::numeric_limits<double>::quiet_NaN();
  std::string witness;
  /// Closed-form value the estimate is compared with (NaN if none).
  double target = std::numeric_limits<double>::quiet_NaN();
  /// (best_value - target)/target.
  double gap = std::numeric_limits<double>::quiet_NaN();
  /// Relative phases of the best pair: f = f0 e^{i alpha}, g = f0 e^{i eta}.
  PhaseAnsatz alpha;
  PhaseAnsatz eta;
  std::vector<double> parameters;
  std::vector<TracePoint> trace;
  int restarts_used = 0;
  /// The last stage ran out of iterations before the simplex collapsed.
  bool budget_exhausted = false;
  /// max |phase'| over both optimized maps; grows when minimizers concentrate.
  double max_phase_derivative = 0.0;
  /// Optimized maps on the optimizer grid.
  std::vector<cplx> f_samples;
  std::vector<cplx> g_samples;
};

/// Minimizes |f~ - g| over f~ in E_{deg f} (starting at f) and g in E_{d2}.
/// Supported indices: s = 1 with p >= 1, and (s, p) = (1/2, 2); anything else
/// throws IndexOutOfRange.  K must not exceed M/4.
OptimizeReport estimate_inf_distance(const AnalyticCircleMap& f, int d2, const SobolevIndex& index,
                                     const OptimizeBudget& budget = {});
OptimizeReport estimate_inf_distance(const CircleMap& f, int d2, const SobolevIndex& index,
                                     const OptimizeBudget& budget = {});

/// Minimizes |f - g| over g in E_{d2} with f fixed.
OptimizeReport estimate_point_to_class(const AnalyticCircleMap& f, int d2, const SobolevIndex& index,
                                       const OptimizeBudget& budget = {});
OptimizeReport estimate_point_to_class(const CircleMap& f, int d2, const SobolevIndex& index,
                                       const OptimizeBudget& budget = {});

struct ProbeLevel {
  OptimizeBudget budget;
  OptimizeReport report;
};

struct AttainmentProbe {
  int d1 = 0;
  int d2 = 0;
  double p = 1.0;
  double bound = 0.0;
  std::vector<ProbeLevel> levels;
  /// Grid L^2 distance of the best pair at the last level to attainment_pair,
  /// minimized over rotations (NaN unless d2 = -d1 and 1 < p < 2).
  double distance_to_constructed = std::numeric_limits<double>::quiet_NaN();
};

/// Runs estimate_inf_distance from power_map(d1) to E_{d2} for each budget
/// in turn.  Throws IndexOutOfRange unless p >= 1.
AttainmentProbe attainment_probe(int d1, int d2, double p, const std::vector<OptimizeBudget>& budgets);

/// 2^{1/p+1} pi^{1/p-1} |d1 - d2|.
double w1p_class_distance(int d1, int d2, double p);

}  // namespace hg
