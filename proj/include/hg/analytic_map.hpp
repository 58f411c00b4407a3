#pragma once

// Circle maps given by an explicit lift theta -> phi(theta) on [0, 2 pi] with
// a known derivative.  Gallery constructions are built in this form and only
// sampled onto a grid when a grid routine needs them.

#include <functional>
#include <vector>

#include "hg/grid_core.hpp"

namespace hg {

struct AnalyticCircleMap {
  /// Lift on [0, 2 pi]; must satisfy phase(2 pi) = phase(0) + 2 pi winding.
  std::function<double(double)> phase;
  std::function<double(double)> phase_derivative;
  int winding = 0;
  /// Points of [0, 2 pi) where the derivative may jump or blow up.  Sorted.
  std::vector<double> breakpoints;
  /// True when the phase is only piecewise smooth.
  bool piecewise = false;

  /// Lift evaluated at any real theta (extended by the winding).
  double phase_at(double theta) const;
  double derivative_at(double theta) const;
  cplx value_at(double theta) const;
  /// d/dtheta of exp(i phi) = i phi' exp(i phi).
  cplx tangent_at(double theta) const;

  CircleMap sample(std::size_t M = kDefaultGridM) const;
  std::vector<cplx> sample_derivative(std::size_t M = kDefaultGridM) const;
  Phase sample_phase(std::size_t M = kDefaultGridM) const;
  std::vector<double> sample_phase_derivative(std::size_t M = kDefaultGridM) const;
};

/// Smooth map with lift d * theta.
AnalyticCircleMap analytic_power(int d);

/// Constant map exp(i c).
AnalyticCircleMap analytic_constant(double c = 0.0);

/// Lift from a periodic correction: phi = winding * theta + eta(theta).
AnalyticCircleMap from_periodic_phase(int winding, std::function<double(double)> eta,
                                      std::function<double(double)> eta_prime,
                                      std::vector<double> breakpoints = {},
                                      bool piecewise = false);

/// Pointwise product (phases add).
AnalyticCircleMap analytic_product(const AnalyticCircleMap& f, const AnalyticCircleMap& g);
AnalyticCircleMap analytic_conjugate(const AnalyticCircleMap& f);

/// (1/2pi) int f ^ f' by composite Gauss-Legendre between breakpoints, with
/// about `cells` cells over the circle.  Exact up to rounding for piecewise
/// linear phases.
double degree_kronecker_s1(const AnalyticCircleMap& f, std::size_t cells = kDefaultGridM);

/// Union of the breakpoints of f and g with 0 and 2 pi, sorted and deduplicated.
std::vector<double> merged_breakpoints(const AnalyticCircleMap& f, const AnalyticCircleMap& g);

}  // namespace hg
