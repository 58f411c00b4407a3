#include "hg/sphere2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/summation.hpp"
#include "hg/errors.hpp"
#include "hg/fft.hpp"
#include "hg/profiles.hpp"

namespace hg {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm2(const Vec3& a) { return dot(a, a); }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Vec3 normalized(const Vec3& a) { return scale(a, 1.0 / std::sqrt(norm2(a))); }

// Weights of the derivative at x0 of the Lagrange interpolant through x[0..4].
std::array<double, 5> lagrange_derivative_weights(const std::array<double, 5>& x, double x0) {
  std::array<double, 5> w{};
  for (int k = 0; k < 5; ++k) {
    double denom = 1.0;
    for (int l = 0; l < 5; ++l) {
      if (l != k) denom *= x[k] - x[l];
    }
    double numer = 0.0;
    for (int m = 0; m < 5; ++m) {
      if (m == k) continue;
      double prod = 1.0;
      for (int l = 0; l < 5; ++l) {
        if (l != k && l != m) prod *= x0 - x[l];
      }
      numer += prod;
    }
    w[k] = numer / denom;
  }
  return w;
}

// Derivatives of a grid vector field in phi and lambda.
struct Gradient {
  std::vector<Vec3> dphi;
  std::vector<Vec3> dlambda;
};

Gradient gradient(const Sphere2Grid& grid, const std::vector<Vec3>& v) {
  const std::size_t np = grid.n_phi(), nl = grid.n_lambda();
  Gradient g;
  g.dphi.assign(np * nl, Vec3{0, 0, 0});
  g.dlambda.assign(np * nl, Vec3{0, 0, 0});

  // Longitude: spectral differentiation of each ring and component.
  std::vector<cplx> ring(nl);
  for (std::size_t i = 0; i < np; ++i) {
    for (int c = 0; c < 3; ++c) {
      for (std::size_t j = 0; j < nl; ++j) ring[j] = v[i * nl + j][c];
      auto X = fft::forward(ring);
      for (std::size_t k = 0; k < nl; ++k) {
        long n = static_cast<long>(k);
        if (n > static_cast<long>(nl / 2)) n -= static_cast<long>(nl);
        if (2 * k == nl) n = 0;  // Nyquist mode has no well-defined derivative
        X[k] *= cplx(0.0, static_cast<double>(n)) / static_cast<double>(nl);
      }
      auto d = fft::backward(X);
      for (std::size_t j = 0; j < nl; ++j) g.dlambda[i * nl + j][c] = d[j].real();
    }
  }

  const std::size_t half = nl / 2;
  if (grid.is_uniform()) {
    // Columns j and j + nl/2 form one great circle sampled uniformly at 2 n_phi
    // points; differentiate it spectrally.  Beyond the south pole the circle
    // runs through column j + nl/2 with colatitude decreasing.
    const std::size_t n2 = 2 * np;
    std::vector<cplx> circle(n2);
    for (std::size_t j = 0; j < half; ++j) {
      for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < np; ++i) {
          circle[i] = v[i * nl + j][c];
          circle[n2 - 1 - i] = v[i * nl + j + half][c];
        }
        auto X = fft::forward(circle);
        for (std::size_t k = 0; k < n2; ++k) {
          long n = static_cast<long>(k);
          if (n > static_cast<long>(np)) n -= static_cast<long>(n2);
          if (k == np) n = 0;
          X[k] *= cplx(0.0, static_cast<double>(n)) / static_cast<double>(n2);
        }
        const auto d = fft::backward(X);
        for (std::size_t i = 0; i < np; ++i) {
          g.dphi[i * nl + j][c] = d[i].real();
          g.dphi[i * nl + j + half][c] = -d[n2 - 1 - i].real();
        }
      }
    }
    return g;
  }

  // Colatitude: 5-point Lagrange stencils along the great circle through
  // columns j and j + nl/2, with ghost nodes mirrored across both poles.
  auto ext_coord = [&](long e) {
    if (e < 0) return -grid.phi(static_cast<std::size_t>(-e - 1));
    if (e >= static_cast<long>(np)) return kTwoPi - grid.phi(2 * np - 1 - static_cast<std::size_t>(e));
    return grid.phi(static_cast<std::size_t>(e));
  };
  auto ext_value = [&](long e, std::size_t j) -> const Vec3& {
    if (e < 0) return v[static_cast<std::size_t>(-e - 1) * nl + (j + half) % nl];
    if (e >= static_cast<long>(np)) {
      return v[(2 * np - 1 - static_cast<std::size_t>(e)) * nl + (j + half) % nl];
    }
    return v[static_cast<std::size_t>(e) * nl + j];
  };
  for (std::size_t i = 0; i < np; ++i) {
    std::array<double, 5> xs;
    for (int k = 0; k < 5; ++k) xs[k] = ext_coord(static_cast<long>(i) + k - 2);
    const auto w = lagrange_derivative_weights(xs, grid.phi(i));
    for (std::size_t j = 0; j < nl; ++j) {
      Vec3 acc{0, 0, 0};
      for (int k = 0; k < 5; ++k) {
        const Vec3& val = ext_value(static_cast<long>(i) + k - 2, j);
        for (int c = 0; c < 3; ++c) acc[c] += w[k] * val[c];
      }
      g.dphi[i * nl + j] = acc;
    }
  }
  return g;
}

}  // namespace

// ---- grids --------------------------------------------------------------------

Sphere2Grid::Sphere2Grid(std::vector<double> edges, std::size_t n_lambda)
    : edges_(std::move(edges)), n_lambda_(n_lambda) {
  if (n_lambda_ < 8 || n_lambda_ % 2 != 0) throw IndexOutOfRange("n_lambda must be even and >= 8");
  if (edges_.size() < 9) throw IndexOutOfRange("need at least 8 colatitude cells");
  const double dl = kTwoPi / static_cast<double>(n_lambda_);
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    nodes_.push_back(0.5 * (edges_[i] + edges_[i + 1]));
    weights_.push_back((std::cos(edges_[i]) - std::cos(edges_[i + 1])) * dl);
  }
}

bool Sphere2Grid::is_uniform() const {
  const double h = kPi / static_cast<double>(n_phi());
  for (std::size_t i = 0; i < n_phi(); ++i) {
    if (std::fabs(edges_[i + 1] - edges_[i] - h) > 1e-12) return false;
  }
  return true;
}

Sphere2Grid Sphere2Grid::uniform(std::size_t n_phi, std::size_t n_lambda) {
  if (n_phi < 8) throw IndexOutOfRange("n_phi must be >= 8");
  std::vector<double> e(n_phi + 1);
  for (std::size_t i = 0; i <= n_phi; ++i) e[i] = kPi * static_cast<double>(i) / n_phi;
  e.back() = kPi;
  return Sphere2Grid(std::move(e), n_lambda);
}

Sphere2Grid Sphere2Grid::polar_refined(std::size_t n_lambda, double r_min, double ratio,
                                       double h_fine, double r_fine, double h_coarse) {
  if (!(r_min > 0.0) || !(ratio > 1.0) || !(h_fine > 0.0) || !(h_coarse > 0.0)) {
    throw IndexOutOfRange("polar_refined: invalid spacing parameters");
  }
  std::vector<double> e{0.0};
  double w = r_min;
  double r = 0.0;
  while (true) {
    w = std::min(w, r < r_fine ? h_fine : h_coarse);
    if (r + w >= kPi) break;
    r += w;
    e.push_back(r);
    w *= ratio;
  }
  if (kPi - e.back() < 0.5 * (e.back() - e[e.size() - 2])) e.pop_back();
  e.push_back(kPi);
  return Sphere2Grid(std::move(e), n_lambda);
}

Vec3 Sphere2Grid::point(std::size_t i, std::size_t j) const {
  const double p = nodes_[i], l = lambda(j);
  return {std::sin(p) * std::cos(l), std::sin(p) * std::sin(l), std::cos(p)};
}

double Sphere2Grid::total_area() const {
  detail::NeumaierSum s;
  for (double w : weights_) s.add(w * static_cast<double>(n_lambda_));
  return s.value();
}

// ---- maps ------------------------------------------------------------------------

Sphere2Map::Sphere2Map(Sphere2Grid grid, std::vector<Vec3> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw GridMismatch("Sphere2Map: value count != grid size");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double n = std::sqrt(norm2(values_[k]));
    if (!(std::fabs(n - 1.0) <= 1e-10)) {
      throw InvalidMap("Sphere2Map: value " + std::to_string(k) + " has norm " + std::to_string(n));
    }
  }
}

Sphere2Map Sphere2Map::from_function(const Sphere2Grid& grid,
                                     const std::function<Vec3(const Vec3&)>& f) {
  std::vector<Vec3> v(grid.size());
  for (std::size_t i = 0; i < grid.n_phi(); ++i) {
    for (std::size_t j = 0; j < grid.n_lambda(); ++j) v[i * grid.n_lambda() + j] = f(grid.point(i, j));
  }
  return Sphere2Map(grid, std::move(v));
}

PolarEstimate degree_kronecker_s2(const Sphere2Map& f) {
  const auto& grid = f.grid();
  const Gradient g = gradient(grid, f.values());
  const std::size_t nl = grid.n_lambda();
  detail::NeumaierSum sum;
  PolarEstimate out;
  for (std::size_t i = 0; i < grid.n_phi(); ++i) {
    const double sp = std::sin(grid.phi(i));
    // det / sin(phi) is the Jacobian against area; integrate it with exact cell areas.
    const double w = grid.weight(i) / (sp * grid.dlambda());
    for (std::size_t j = 0; j < nl; ++j) {
      const std::size_t k = i * nl + j;
      const double det = dot(f.values()[k], cross(g.dphi[k], g.dlambda[k]));
      sum.add(det * w);
      if (sp < 0.05) {
        const double energy_density = norm2(g.dphi[k]) + norm2(g.dlambda[k]) / (sp * sp);
        if (std::fabs(det) / sp > 0.5 * energy_density * 1.01 + 1e-12) out.pole_warning = true;
      }
    }
  }
  out.value = sum.value() * grid.dlambda() / (4.0 * kPi);
  return out;
}

namespace {
double energy_of(const Sphere2Grid& grid, const Gradient& g) {
  const std::size_t nl = grid.n_lambda();
  detail::NeumaierSum sum;
  for (std::size_t i = 0; i < grid.n_phi(); ++i) {
    const double sp = std::sin(grid.phi(i));
    for (std::size_t j = 0; j < nl; ++j) {
      const std::size_t k = i * nl + j;
      sum.add((norm2(g.dphi[k]) + norm2(g.dlambda[k]) / (sp * sp)) * grid.weight(i));
    }
  }
  return sum.value();
}
}  // namespace

PolarEstimate dirichlet_energy(const Sphere2Map& f) {
  const Gradient g = gradient(f.grid(), f.values());
  PolarEstimate out;
  out.value = energy_of(f.grid(), g);
  out.pole_warning = degree_kronecker_s2(f).pole_warning;
  return out;
}

std::vector<Vec3> difference(const Sphere2Map& f, const Sphere2Map& g) {
  if (!(f.grid() == g.grid())) throw GridMismatch("Sphere2Map difference on different grids");
  std::vector<Vec3> d(f.values().size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = sub(f.values()[k], g.values()[k]);
  return d;
}

double h1_distance(const Sphere2Map& f, const Sphere2Map& g) {
  const auto d = difference(f, g);
  return std::sqrt(energy_of(f.grid(), gradient(f.grid(), d)));
}

Sphere2Map antipodal(const Sphere2Map& f) {
  std::vector<Vec3> v(f.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = scale(f.values()[k], -1.0);
  return Sphere2Map(f.grid(), std::move(v));
}

// ---- constructions ------------------------------------------------------------------

Sphere2Map stereographic_power(int d, const Sphere2Grid& grid) {
  const int ad = std::abs(d);
  return Sphere2Map::from_function(grid, [d, ad](const Vec3& s) -> Vec3 {
    if (d == 0) return {0.0, 0.0, 1.0};
    const double phi = std::acos(std::clamp(s[2], -1.0, 1.0));
    const double lam = std::atan2(s[1], s[0]);
    // |T(s)| = cot(phi/2); tan(phi'/2) = tan(phi/2)^|d|.
    const double t = std::pow(std::tan(0.5 * phi), ad);
    const double phi2 = 2.0 * std::atan(t);
    const double lam2 = d * lam;
    return {std::sin(phi2) * std::cos(lam2), std::sin(phi2) * std::sin(lam2), std::cos(phi2)};
  });
}

std::function<double(double)> default_suspension_profile(int k, double R) {
  return [k, R](double r) { return kPi * k * smooth_step((r - 0.05 * R) / (0.9 * R)); };
}

namespace {

// Orthonormal e1, e2 with e1 x e2 = center.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& center) {
  const Vec3 a = std::fabs(center[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(sub(a, scale(center, dot(a, center))));
  return {e1, cross(center, e1)};
}

// Geodesic polar coordinates (r, alpha) of s around center.
std::pair<double, double> chart(const Vec3& s, const Vec3& center, const Vec3& e1, const Vec3& e2) {
  const double r = std::acos(std::clamp(dot(s, center), -1.0, 1.0));
  const double alpha = std::atan2(dot(s, e2), dot(s, e1));
  return {r, alpha};
}

Vec3 suspension_value(double F, int h_degree, double alpha) {
  const double sf = std::sin(F);
  return {sf * std::cos(h_degree * alpha), sf * std::sin(h_degree * alpha), std::cos(F)};
}

}  // namespace

Sphere2Map suspension(const SuspensionSpec& spec, const Sphere2Grid& grid) {
  if (!(spec.R > 0.0 && spec.R < 1.0)) throw IndexOutOfRange("suspension needs 0 < R < 1");
  if (!spec.F) throw InvalidProfile("suspension needs a profile");
  if (std::fabs(spec.F(0.0)) > 1e-9 || std::fabs(spec.F(spec.R) - kPi * spec.k) > 1e-9) {
    throw InvalidProfile("suspension profile must satisfy F(0) = 0 and F(R) = k pi");
  }
  const Vec3 center = normalized(spec.center);
  const auto [e1, e2] = tangent_frame(center);
  const Vec3 outside{0.0, 0.0, std::cos(kPi * spec.k)};
  return Sphere2Map::from_function(grid, [&](const Vec3& s) {
    const auto [r, alpha] = chart(s, center, e1, e2);
    if (r >= spec.R) return outside;
    return suspension_value(spec.F(r), spec.h_degree, alpha);
  });
}

Sphere2Grid bump_grid(double eps, std::size_t n_lambda) {
  return Sphere2Grid::polar_refined(n_lambda, eps / 20.0, 1.05, 0.01, 0.6, kPi / 128.0);
}

Sphere2Pair bump_pair_s2(double eps, const Sphere2Grid& grid) {
  const CapacityProfiles prof(eps, 0.5);
  SuspensionSpec sf;
  sf.F = [prof](double r) { return prof.F(r); };
  sf.k = 1;
  sf.R = 0.5;
  SuspensionSpec sg = sf;
  sg.F = [prof](double r) { return prof.G(r); };
  sg.k = 0;
  return {suspension(sf, grid), suspension(sg, grid)};
}

namespace {

// Degree-m bump of radius rho at center, equal to (0, 0, 1) outside: the
// suspension with k = 1 rotated by pi about the first axis.
Vec3 rotated_bump(const Vec3& s, const Vec3& center, const Vec3& e1, const Vec3& e2, double rho,
                  int m) {
  const auto [r, alpha] = chart(s, center, e1, e2);
  if (r >= rho) return {0.0, 0.0, 1.0};
  const Vec3 v = suspension_value(kPi * smooth_step((r - 0.2 * rho) / (0.6 * rho)), m, alpha);
  return {v[0], -v[1], -v[2]};
}

}  // namespace

Sphere2Map multi_bump_s2(int d, int n, const Sphere2Grid& grid) {
  if (d == 0) throw IndexOutOfRange("multi_bump needs d != 0");
  if (n < 2) throw IndexOutOfRange("multi_bump on S^2 needs n >= 2 (radius < 1)");
  const int count = std::abs(d);
  const double rho = 1.0 / n;
  if (count > 1 && kTwoPi / count < 2.0 * rho) throw Overcrowded("multi_bump: bumps overlap");
  struct Ball {
    Vec3 c, e1, e2;
  };
  std::vector<Ball> balls;
  for (int j = 0; j < count; ++j) {
    const double a = kTwoPi * j / count;
    const Vec3 c{std::cos(a), std::sin(a), 0.0};
    const auto [e1, e2] = tangent_frame(c);
    balls.push_back({c, e1, e2});
  }
  const int s = d > 0 ? 1 : -1;
  return Sphere2Map::from_function(grid, [&](const Vec3& p) -> Vec3 {
    for (const auto& b : balls) {
      if (dot(p, b.c) > std::cos(rho)) return rotated_bump(p, b.c, b.e1, b.e2, rho, s);
    }
    return {0.0, 0.0, 1.0};
  });
}

Sphere2Grid vo1_grid(std::size_t n_lambda) {
  return Sphere2Grid::polar_refined(n_lambda, 0.004, 1.1, 0.004, 0.6, kPi / 128.0);
}

Sphere2Pair vo1_pair(int d1, int d2, const Sphere2Grid& grid) {
  if (d1 == d2) throw IndexOutOfRange("vo1_pair needs d1 != d2");
  constexpr double R = 0.5;
  const double w = R / 12.0;
  // 0 on r <= R/4, pi/2 on [R/3, 2R/3], 0 on [3R/4, R].
  auto G = [w](double r) {
    return 0.5 * kPi * (smooth_step((r - R / 4.0) / w) - smooth_step((r - 2.0 * R / 3.0) / w));
  };
  auto F = [G](double r) { return r < R / 2.0 ? G(r) : kPi - G(r); };
  const int d = d1 - d2;
  const Vec3 center{0.0, 0.0, 1.0};
  const auto [e1, e2] = tangent_frame(center);
  const double rho = R / 5.0;  // inner bump lives where F = G = 0

  auto build = [&](const std::function<double(double)>& P, double outside_z) {
    return Sphere2Map::from_function(grid, [&](const Vec3& s) -> Vec3 {
      const auto [r, alpha] = chart(s, center, e1, e2);
      if (r >= R) return {0.0, 0.0, outside_z};
      if (r < rho && d2 != 0) return rotated_bump(s, center, e1, e2, rho, d2);
      return suspension_value(P(r), d, alpha);
    });
  };
  return {build(F, -1.0), build(G, 1.0)};
}

}  // namespace hg
