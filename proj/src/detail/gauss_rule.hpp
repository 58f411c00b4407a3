#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <vector>

namespace hg::detail {

/// Full N-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

template <unsigned N>
GaussRule gauss_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  GaussRule r;
  const auto& a = G::abscissa();
  const auto& wt = G::weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      r.x.push_back(0.0);
      r.w.push_back(wt[i]);
    } else {
      r.x.push_back(-a[i]);
      r.w.push_back(wt[i]);
      r.x.push_back(a[i]);
      r.w.push_back(wt[i]);
    }
  }
  return r;
}

/// Maps a rule onto [a, b]; nodes never touch the endpoints.
inline void map_rule(const GaussRule& r, double a, double b, std::vector<double>& x,
                     std::vector<double>& w) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  x.resize(r.x.size());
  w.resize(r.x.size());
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    x[i] = c + h * r.x[i];
    w[i] = h * r.w[i];
  }
}

}  // namespace hg::detail
