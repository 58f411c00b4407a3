#include "hg/profiles.hpp"

#include <cmath>
#include <numbers>

#include "hg/errors.hpp"

namespace hg {

namespace {
constexpr double kPi = std::numbers::pi;
}

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double smooth_step_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  const double ab = a + b;
  if (ab == 0.0) return 0.0;
  // (a'b - ab')/(a+b)^2 with a' = a/t^2, b' = -b/(1-t)^2
  const double u = 1.0 / (t * t) + 1.0 / ((1.0 - t) * (1.0 - t));
  return (a / ab) * (b / ab) * u;
}

double cutoff_k(double t) { return 1.0 - smooth_step(2.0 * t - 0.5); }

double cutoff_k_derivative(double t) { return -2.0 * smooth_step_derivative(2.0 * t - 0.5); }

CapacityProfiles::CapacityProfiles(double eps, double R) : eps_(eps), R_(R) {
  if (!(eps > 0.0 && eps < std::exp(-2.0))) {
    throw IndexOutOfRange("capacity profiles need 0 < eps < e^-2");
  }
  if (!(R > std::sqrt(eps) && R < 1.0)) {
    throw IndexOutOfRange("capacity profiles need sqrt(eps) < R < 1");
  }
  log_inv_eps_ = std::log(1.0 / eps);
}

double CapacityProfiles::H(double r) const {
  r = std::fabs(r);
  if (r <= eps_) return 1.0;
  if (r >= 1.0) return 0.0;
  const double u = 0.25 - std::log(std::log(1.0 / r) / log_inv_eps_) / (2.0 * std::numbers::ln2);
  return cutoff_k(u);
}

double CapacityProfiles::H_derivative(double r) const {
  r = std::fabs(r);
  if (r <= eps_ || r >= 1.0) return 0.0;
  const double L = std::log(1.0 / r);
  const double u = 0.25 - std::log(L / log_inv_eps_) / (2.0 * std::numbers::ln2);
  const double du = 1.0 / (2.0 * std::numbers::ln2 * r * L);
  return cutoff_k_derivative(u) * du;
}

double CapacityProfiles::F(double r) const {
  r = std::fabs(r);
  if (r < eps_) return 0.5 * kPi * (1.0 - cutoff_k(r / eps_));
  return kPi * (1.0 - 0.5 * H(r));
}

double CapacityProfiles::F_derivative(double r) const {
  r = std::fabs(r);
  if (r < eps_) return -0.5 * kPi * cutoff_k_derivative(r / eps_) / eps_;
  return -0.5 * kPi * H_derivative(r);
}

double CapacityProfiles::G(double r) const {
  r = std::fabs(r);
  if (r < eps_) return F(r);
  return 0.5 * kPi * H(r);
}

double CapacityProfiles::G_derivative(double r) const {
  r = std::fabs(r);
  if (r < eps_) return F_derivative(r);
  return 0.5 * kPi * H_derivative(r);
}

}  // namespace hg
