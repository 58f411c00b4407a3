#include "hg/analytic_map.hpp"

#include <algorithm>
#include <cmath>

#include "detail/gauss_rule.hpp"
#include "detail/summation.hpp"

namespace hg {

namespace {
// Splits theta = 2 pi k + t with t in [0, 2 pi).
std::pair<double, double> reduce(double theta) {
  const double k = std::floor(theta / kTwoPi);
  double t = theta - k * kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  if (t < 0.0) t = 0.0;
  return {k, t};
}
}  // namespace

double AnalyticCircleMap::phase_at(double theta) const {
  if (theta >= 0.0 && theta <= kTwoPi) return phase(theta);
  auto [k, t] = reduce(theta);
  return phase(t) + kTwoPi * winding * k;
}

double AnalyticCircleMap::derivative_at(double theta) const {
  if (theta >= 0.0 && theta < kTwoPi) return phase_derivative(theta);
  return phase_derivative(reduce(theta).second);
}

cplx AnalyticCircleMap::value_at(double theta) const { return std::polar(1.0, phase_at(theta)); }

cplx AnalyticCircleMap::tangent_at(double theta) const {
  return cplx(0.0, derivative_at(theta)) * value_at(theta);
}

CircleMap AnalyticCircleMap::sample(std::size_t M) const {
  validate_grid_size(M);
  std::vector<cplx> s(M);
  for (std::size_t j = 0; j < M; ++j) s[j] = std::polar(1.0, phase(grid_theta(j, M)));
  return CircleMap(std::move(s), piecewise);
}

std::vector<cplx> AnalyticCircleMap::sample_derivative(std::size_t M) const {
  validate_grid_size(M);
  std::vector<cplx> s(M);
  for (std::size_t j = 0; j < M; ++j) s[j] = tangent_at(grid_theta(j, M));
  return s;
}

Phase AnalyticCircleMap::sample_phase(std::size_t M) const {
  validate_grid_size(M);
  Phase p;
  p.values.resize(M);
  for (std::size_t j = 0; j < M; ++j) p.values[j] = phase(grid_theta(j, M));
  p.winding = winding;
  return p;
}

std::vector<double> AnalyticCircleMap::sample_phase_derivative(std::size_t M) const {
  validate_grid_size(M);
  std::vector<double> s(M);
  for (std::size_t j = 0; j < M; ++j) s[j] = phase_derivative(grid_theta(j, M));
  return s;
}

AnalyticCircleMap analytic_power(int d) {
  AnalyticCircleMap m;
  const double dd = d;
  m.phase = [dd](double t) { return dd * t; };
  m.phase_derivative = [dd](double) { return dd; };
  m.winding = d;
  return m;
}

AnalyticCircleMap analytic_constant(double c) {
  AnalyticCircleMap m;
  m.phase = [c](double) { return c; };
  m.phase_derivative = [](double) { return 0.0; };
  return m;
}

AnalyticCircleMap from_periodic_phase(int winding, std::function<double(double)> eta,
                                      std::function<double(double)> eta_prime,
                                      std::vector<double> breakpoints, bool piecewise) {
  AnalyticCircleMap m;
  const double w = winding;
  m.phase = [w, eta](double t) { return w * t + eta(t); };
  m.phase_derivative = [w, eta_prime](double t) { return w + eta_prime(t); };
  m.winding = winding;
  m.breakpoints = std::move(breakpoints);
  m.piecewise = piecewise;
  return m;
}

AnalyticCircleMap analytic_product(const AnalyticCircleMap& f, const AnalyticCircleMap& g) {
  AnalyticCircleMap m;
  m.phase = [f, g](double t) { return f.phase(t) + g.phase(t); };
  m.phase_derivative = [f, g](double t) { return f.phase_derivative(t) + g.phase_derivative(t); };
  m.winding = f.winding + g.winding;
  m.breakpoints = f.breakpoints;
  m.breakpoints.insert(m.breakpoints.end(), g.breakpoints.begin(), g.breakpoints.end());
  std::sort(m.breakpoints.begin(), m.breakpoints.end());
  m.breakpoints.erase(std::unique(m.breakpoints.begin(), m.breakpoints.end()), m.breakpoints.end());
  m.piecewise = f.piecewise || g.piecewise;
  return m;
}

AnalyticCircleMap analytic_conjugate(const AnalyticCircleMap& f) {
  AnalyticCircleMap m = f;
  m.phase = [f](double t) { return -f.phase(t); };
  m.phase_derivative = [f](double t) { return -f.phase_derivative(t); };
  m.winding = -f.winding;
  return m;
}

std::vector<double> merged_breakpoints(const AnalyticCircleMap& f, const AnalyticCircleMap& g) {
  std::vector<double> b{0.0, kTwoPi};
  for (double x : f.breakpoints) b.push_back(x);
  for (double x : g.breakpoints) b.push_back(x);
  for (double& x : b) x = std::clamp(x, 0.0, kTwoPi);
  std::sort(b.begin(), b.end());
  std::vector<double> out;
  for (double x : b) {
    if (out.empty() || x - out.back() > 1e-14) out.push_back(x);
  }
  return out;
}

double degree_kronecker_s1(const AnalyticCircleMap& f, std::size_t cells) {
  static const detail::GaussRule rule = detail::gauss_rule<8>();
  const auto bp = merged_breakpoints(f, f);
  const double cell_width = kTwoPi / static_cast<double>(std::max<std::size_t>(cells, 1));
  detail::NeumaierSum sum;
  std::vector<double> x, w;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i], b = bp[i + 1];
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / cell_width)));
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t c = 0; c < n; ++c) {
      const double lo = a + h * static_cast<double>(c);
      detail::map_rule(rule, lo, (c + 1 == n) ? b : lo + h, x, w);
      for (std::size_t q = 0; q < x.size(); ++q) {
        sum.add(w[q] * std::imag(std::conj(f.value_at(x[q])) * f.tangent_at(x[q])));
      }
    }
  }
  return sum.value() / kTwoPi;
}

}  // namespace hg
