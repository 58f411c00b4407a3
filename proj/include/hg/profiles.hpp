#pragma once

// Smooth one-dimensional building blocks: a C-infinity step, the cutoff K,
// and the log-log capacity profiles H_eps, F_eps, G_eps.

namespace hg {

/// C-infinity step: 0 for t <= 0, 1 for t >= 1, e^{-1/t}/(e^{-1/t}+e^{-1/(1-t)})
/// in between.  All derivatives vanish at t = 0 and t = 1.
double smooth_step(double t);
double smooth_step_derivative(double t);

/// Non-increasing cutoff: 1 on t <= 1/4, 0 on t >= 3/4,
/// K(t) = 1 - smooth_step(2t - 1/2) in between.
double cutoff_k(double t);
double cutoff_k_derivative(double t);

/// Capacity profiles for a fixed eps in (0, e^{-2}) on the radius range [0, R].
class CapacityProfiles {
 public:
  /// Throws IndexOutOfRange unless 0 < eps < e^{-2} and sqrt(eps) < R < 1.
  explicit CapacityProfiles(double eps, double R = 0.5);

  double eps() const { return eps_; }
  double radius() const { return R_; }

  /// K(1/4 - ln(ln(1/r)/ln(1/eps)) / (2 ln 2)); 1 on r <= eps, 0 on r >= sqrt(eps).
  double H(double r) const;
  double H_derivative(double r) const;
  /// pi(1 - K(r/eps))/2 on r < eps, pi(1 - H/2) on r >= eps.  F(0) = 0, F = pi for r >= sqrt(eps).
  double F(double r) const;
  double F_derivative(double r) const;
  /// Equal to F on r < eps and to pi H/2 beyond, so F + G = pi there.
  double G(double r) const;
  double G_derivative(double r) const;

 private:
  double eps_;
  double R_;
  double log_inv_eps_;
};

}  // namespace hg
