#pragma once

// Maps S^2 -> S^2 sampled on latitude-longitude grids: Kronecker degree,
// Dirichlet energy, H^1 distance, stereographic powers, suspensions and the
// bump constructions built from them.

#include <array>
#include <functional>
#include <vector>

#include "hg/grid_core.hpp"

namespace hg {

using Vec3 = std::array<double, 3>;

/// Colatitude cells [e_i, e_{i+1}] (nodes at midpoints) times n_lambda
/// uniform longitudes lambda_j = 2 pi j / n_lambda.
class Sphere2Grid {
 public:
  /// n_phi equal colatitude cells.  Throws IndexOutOfRange unless n_phi >= 8
  /// and n_lambda >= 8 is even.
  static Sphere2Grid uniform(std::size_t n_phi = 128, std::size_t n_lambda = 256);

  /// Cells refined towards the north pole: widths grow geometrically by
  /// `ratio` from r_min, capped at h_fine for colatitude < r_fine and at
  /// h_coarse beyond.
  static Sphere2Grid polar_refined(std::size_t n_lambda, double r_min, double ratio,
                                   double h_fine, double r_fine, double h_coarse);

  std::size_t n_phi() const { return nodes_.size(); }
  std::size_t n_lambda() const { return n_lambda_; }
  std::size_t size() const { return n_phi() * n_lambda_; }
  const std::vector<double>& edges() const { return edges_; }
  double phi(std::size_t i) const { return nodes_[i]; }
  double lambda(std::size_t j) const { return kTwoPi * static_cast<double>(j) / n_lambda_; }
  double dlambda() const { return kTwoPi / static_cast<double>(n_lambda_); }
  /// Exact area of cell (i, j).
  double weight(std::size_t i) const { return weights_[i]; }
  Vec3 point(std::size_t i, std::size_t j) const;
  double total_area() const;
  /// All colatitude cells have width pi / n_phi.
  bool is_uniform() const;

  bool operator==(const Sphere2Grid& o) const {
    return n_lambda_ == o.n_lambda_ && edges_ == o.edges_;
  }

 private:
  Sphere2Grid(std::vector<double> edges, std::size_t n_lambda);
  std::vector<double> edges_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::size_t n_lambda_ = 0;
};

/// Unit vectors on a Sphere2Grid, row-major (i * n_lambda + j).
class Sphere2Map {
 public:
  /// Throws InvalidMap unless every value has norm 1 +- 1e-10.
  Sphere2Map(Sphere2Grid grid, std::vector<Vec3> values);

  static Sphere2Map from_function(const Sphere2Grid& grid,
                                  const std::function<Vec3(const Vec3&)>& f);

  const Sphere2Grid& grid() const { return grid_; }
  const std::vector<Vec3>& values() const { return values_; }
  const Vec3& at(std::size_t i, std::size_t j) const { return values_[i * grid_.n_lambda() + j]; }

 private:
  Sphere2Grid grid_;
  std::vector<Vec3> values_;
};

/// Result of a quadrature that may be unreliable near the poles.
struct PolarEstimate {
  double value = 0.0;
  /// Set when the pointwise bound |det grad f| <= |grad f|^2/2 fails by more
  /// than 1% at some node with sin(phi) < 0.05.
  bool pole_warning = false;
};

/// (1/4 pi) int f . (f_phi x f_lambda) dphi dlambda.
PolarEstimate degree_kronecker_s2(const Sphere2Map& f);
/// int |grad f|^2.
PolarEstimate dirichlet_energy(const Sphere2Map& f);
/// sqrt(int |grad (f - g)|^2).  Throws GridMismatch.
double h1_distance(const Sphere2Map& f, const Sphere2Map& g);

/// Componentwise f - g.
std::vector<Vec3> difference(const Sphere2Map& f, const Sphere2Map& g);
Sphere2Map antipodal(const Sphere2Map& f);

/// T^{-1}(T(s)^d) for d >= 0 and T^{-1}(conj(T(s))^{|d|}) for d < 0, with T
/// the stereographic projection from the north pole.  Degree d.
Sphere2Map stereographic_power(int d, const Sphere2Grid& grid);

struct SuspensionSpec {
  /// Radial profile on [0, R] with F(0) = 0, F(R) = k pi, constant near both ends.
  std::function<double(double)> F;
  int k = 1;
  /// Degree of the equatorial map h(e^{i a}) = e^{i h_degree a}.
  int h_degree = 1;
  Vec3 center{0.0, 0.0, 1.0};
  /// Geodesic radius, 0 < R < 1.
  double R = 0.5;
};

/// k pi smooth_step((r - 0.05 R)/(0.9 R)).
std::function<double(double)> default_suspension_profile(int k, double R);

/// (sin F(r) h(x/|x|), cos F(r)) in the exponential chart at the center and
/// the constant (0, 0, cos k pi) outside the ball.  Throws InvalidProfile if
/// F(0) != 0 or F(R) != k pi (to 1e-9), IndexOutOfRange if R is not in (0, 1).
Sphere2Map suspension(const SuspensionSpec& spec, const Sphere2Grid& grid);

/// Capacity bump pair on S^2 centered at the north pole (F_eps, G_eps with h = id).
struct Sphere2Pair {
  Sphere2Map f;
  Sphere2Map g;
};
Sphere2Pair bump_pair_s2(double eps, const Sphere2Grid& grid);

/// Grid suited to bump_pair_s2(eps): refined down to eps/20 at the north pole.
Sphere2Grid bump_grid(double eps, std::size_t n_lambda = 256);

/// |d| bumps of degree sign(d) and radius 1/n, centers equally spaced on the
/// equator; equal to (0, 0, 1) outside.  Throws Overcrowded if they overlap.
Sphere2Map multi_bump_s2(int d, int n, const Sphere2Grid& grid);

/// Pair with degrees (d1, d2) whose difference does not depend on d1 - d2:
/// f, g suspensions with profiles F, G that agree on r < R/2 and satisfy
/// F + G = pi beyond; a degree-d2 bump is inserted at the center of both.
Sphere2Pair vo1_pair(int d1, int d2, const Sphere2Grid& grid);

/// Grid suited to vo1_pair: uniform cells of width 0.004 up to colatitude 0.6.
Sphere2Grid vo1_grid(std::size_t n_lambda = 256);

}  // namespace hg
