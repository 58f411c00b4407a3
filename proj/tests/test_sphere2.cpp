#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hg/errors.hpp"
#include "hg/sphere2.hpp"

using namespace hg;

namespace {

const Sphere2Grid& default_grid() {
  static const Sphere2Grid g = Sphere2Grid::uniform(128, 256);
  return g;
}

Sphere2Map suspension_map(int k, int dh, const Sphere2Grid& grid) {
  SuspensionSpec sp;
  sp.k = k;
  sp.h_degree = dh;
  sp.F = default_suspension_profile(k, sp.R);
  return suspension(sp, grid);
}

Vec3 normalize(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Rotated stereographic power plus a bounded smooth perturbation of norm
// < 1, normalized.  The straight-line homotopy never vanishes, so the degree is d.
Sphere2Map random_map_of_degree(int d, std::mt19937_64& rng, const Sphere2Grid& grid) {
  std::normal_distribution<double> n(0.0, 1.0);
  const auto base = stereographic_power(d, grid);
  // Random rotation from a normalized quaternion.
  double q[4];
  double qn = 0.0;
  for (double& v : q) {
    v = n(rng);
    qn += v * v;
  }
  qn = std::sqrt(qn);
  for (double& v : q) v /= qn;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  const double R[3][3] = {{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
                          {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
                          {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
  Vec3 freq[3];
  for (auto& f : freq) f = {2.0 * n(rng), 2.0 * n(rng), 2.0 * n(rng)};
  std::vector<Vec3> values(grid.size());
  for (std::size_t i = 0; i < grid.n_phi(); ++i) {
    for (std::size_t j = 0; j < grid.n_lambda(); ++j) {
      const Vec3 s = grid.point(i, j);
      const Vec3& b = base.at(i, j);
      Vec3 v{0, 0, 0};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) v[r] += R[r][c] * b[c];
        v[r] += 0.5 * std::sin(freq[r][0] * s[0] + freq[r][1] * s[1] + freq[r][2] * s[2]);
      }
      values[i * grid.n_lambda() + j] = normalize(v);
    }
  }
  return Sphere2Map(grid, std::move(values));
}

}  // namespace

TEST_CASE("grids cover the sphere") {
  CHECK(default_grid().total_area() == doctest::Approx(4.0 * kPi).epsilon(1e-12));
  CHECK(vo1_grid().total_area() == doctest::Approx(4.0 * kPi).epsilon(1e-12));
  CHECK(bump_grid(1e-3).total_area() == doctest::Approx(4.0 * kPi).epsilon(1e-12));
  CHECK(default_grid().is_uniform());
  CHECK_FALSE(vo1_grid().is_uniform());
  CHECK_THROWS_AS(Sphere2Grid::uniform(4, 16), IndexOutOfRange);
  CHECK_THROWS_AS(Sphere2Grid::uniform(16, 15), IndexOutOfRange);
}

TEST_CASE("maps must be unit vectors") {
  std::vector<Vec3> v(default_grid().size(), Vec3{0, 0, 1});
  v[7] = {0, 0, 1.01};
  CHECK_THROWS_AS(Sphere2Map(default_grid(), v), InvalidMap);
}

TEST_CASE("constant map") {
  const auto c = Sphere2Map::from_function(default_grid(), [](const Vec3&) { return Vec3{0, 1, 0}; });
  CHECK(std::fabs(degree_kronecker_s2(c).value) < 1e-14);
  CHECK(dirichlet_energy(c).value == doctest::Approx(0.0));
}

TEST_CASE("identity map") {
  const auto id = Sphere2Map::from_function(default_grid(), [](const Vec3& s) { return s; });
  CHECK(degree_kronecker_s2(id).value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(dirichlet_energy(id).value == doctest::Approx(8.0 * kPi).epsilon(1e-6));
}

TEST_CASE("stereographic powers") {
  for (int d : {-2, -1, 1, 2, 3}) {
    const auto f = stereographic_power(d, default_grid());
    const auto deg = degree_kronecker_s2(f);
    CHECK(deg.value == doctest::Approx(d).epsilon(1e-3));
    CHECK_FALSE(deg.pole_warning);
    CHECK(dirichlet_energy(f).value == doctest::Approx(8.0 * kPi * std::abs(d)).epsilon(1e-2));
  }
}

TEST_CASE("suspension degree table") {
  for (int k = 0; k <= 3; ++k) {
    for (int dh = 1; dh <= 3; ++dh) {
      const double expected = (k % 2 == 1) ? dh : 0.0;
      CHECK(degree_kronecker_s2(suspension_map(k, dh, default_grid())).value == doctest::Approx(expected).epsilon(1e-2));
    }
  }
}

TEST_CASE("suspension constant outside the ball") {
  const auto m = suspension_map(3, 2, default_grid());
  const auto& g = default_grid();
  for (std::size_t i = 0; i < g.n_phi(); ++i) {
    if (g.phi(i) <= 0.5) continue;
    for (std::size_t j = 0; j < g.n_lambda(); ++j) {
      CHECK(m.at(i, j)[2] == doctest::Approx(-1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("suspension rejects bad profiles") {
  SuspensionSpec sp;
  sp.k = 2;
  sp.F = default_suspension_profile(1, sp.R);
  CHECK_THROWS_AS(suspension(sp, default_grid()), InvalidProfile);
  sp.F = default_suspension_profile(2, 1.5);
  sp.R = 1.5;
  CHECK_THROWS_AS(suspension(sp, default_grid()), IndexOutOfRange);
}

TEST_CASE("antipodal map flips the degree") {
  for (int dh : {1, 2}) {
    const auto m = suspension_map(1, dh, default_grid());
    CHECK(degree_kronecker_s2(antipodal(m)).value == doctest::Approx(-dh).epsilon(1e-2));
  }
}

TEST_CASE("multi bump degrees add up") {
  for (int d : {1, 2, 4, -3}) {
    CHECK(degree_kronecker_s2(multi_bump_s2(d, 4, default_grid())).value == doctest::Approx(d).epsilon(1e-2));
  }
  CHECK_THROWS_AS(multi_bump_s2(40, 2, default_grid()), Overcrowded);
}

TEST_CASE("energy bounds the degree") {
  std::vector<Sphere2Map> maps = {stereographic_power(2, default_grid()), suspension_map(3, 2, default_grid()),
                                  multi_bump_s2(3, 8, default_grid()), suspension_map(2, 3, default_grid())};
  for (const auto& m : maps) {
    const double deg = degree_kronecker_s2(m).value;
    CHECK(dirichlet_energy(m).value >= 8.0 * kPi * std::fabs(deg) - 0.15);
  }
}

TEST_CASE("bump pair on S^2") {
  for (double eps : {1e-2, 1e-3}) {
    const auto grid = bump_grid(eps);
    const auto pr = bump_pair_s2(eps, grid);
    const auto df = degree_kronecker_s2(pr.f), dg = degree_kronecker_s2(pr.g);
    CHECK(df.value == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(std::fabs(dg.value) < 1e-2);
    CHECK(std::isfinite(dirichlet_energy(pr.f).value));
  }
}

TEST_CASE("vo1 pair") {
  const auto grid = vo1_grid();
  const auto a = vo1_pair(3, 0, grid), b = vo1_pair(7, 0, grid);
  const auto da = difference(a.f, a.g), db = difference(b.f, b.g);
  double diff = 0.0;
  for (std::size_t k = 0; k < da.size(); ++k) {
    for (int c = 0; c < 3; ++c) diff = std::max(diff, std::fabs(da[k][c] - db[k][c]));
  }
  CHECK(diff < 1e-12);
  CHECK(h1_distance(a.f, a.g) == doctest::Approx(h1_distance(b.f, b.g)).epsilon(1e-6));
  // f - g only has a last coordinate.
  for (const auto& v : da) {
    CHECK(std::fabs(v[0]) < 1e-12);
    CHECK(std::fabs(v[1]) < 1e-12);
  }
  const auto c = vo1_pair(1, 0, grid);
  CHECK(degree_kronecker_s2(c.f).value == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(std::fabs(degree_kronecker_s2(c.g).value) < 1e-2);
  const auto e = vo1_pair(2, 1, grid);
  CHECK(degree_kronecker_s2(e.f).value == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(degree_kronecker_s2(e.g).value == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("H^1 lower bound between classes") {
  std::mt19937_64 rng(31);
  const auto& grid = default_grid();
  for (auto [d1, d2] : {std::pair{0, 1}, {1, 2}}) {
    const auto f = d1 == 0 ? Sphere2Map::from_function(grid, [](const Vec3&) { return Vec3{0, 0, 1}; })
                           : stereographic_power(d1, grid);
    for (int t = 0; t < 10; ++t) {
      const auto g = random_map_of_degree(d2, rng, grid);
      REQUIRE(degree_kronecker_s2(g).value == doctest::Approx(d2).epsilon(1e-2));
      const double h = h1_distance(f, g);
      CHECK(h * h >= 8.0 * kPi * (d2 - d1) - 0.1);
    }
  }
}

TEST_CASE("grid mismatch") {
  const auto a = stereographic_power(1, default_grid());
  const auto b = stereographic_power(1, Sphere2Grid::uniform(64, 128));
  CHECK_THROWS_AS(h1_distance(a, b), GridMismatch);
  CHECK(h1_distance(a, a) == 0.0);
}
