#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hg/errors.hpp"
#include "hg/gallery.hpp"
#include "hg/seminorms.hpp"

using namespace hg;

namespace {

double sup_phase_derivative_error(const AnalyticCircleMap& m, std::size_t M) {
  // Central differences of the lift against the supplied derivative, away from breakpoints.
  const double h = 1e-6;
  double err = 0.0;
  for (std::size_t j = 0; j < M; ++j) {
    const double t = grid_theta(j, M) + 0.37 * kTwoPi / M;
    bool near_break = false;
    for (double b : m.breakpoints) near_break |= std::fabs(std::remainder(t - b, kTwoPi)) < 1e-4;
    if (near_break) continue;
    const double fd = (m.phase_at(t + h) - m.phase_at(t - h)) / (2.0 * h);
    err = std::max(err, std::fabs(fd - m.derivative_at(t)) / std::max(1.0, std::fabs(fd)));
  }
  return err;
}

}  // namespace

TEST_CASE("zigzag pair") {
  const auto z = zigzag_pair(3, 1);
  CHECK(z.f.winding == 3);
  CHECK(z.g.winding == 1);
  CHECK(z.claimed_value == doctest::Approx(8.0));
  CHECK_THROWS_AS(zigzag_pair(2, 2), IndexOutOfRange);
  // Order of the arguments only swaps the roles.
  const auto r = zigzag_pair(1, 3);
  CHECK(r.f.winding == 1);
  CHECK(r.g.winding == 3);
  CHECK(w1p_distance(r.f, r.g, 1.0) == doctest::Approx(8.0).epsilon(1e-3));
}

TEST_CASE("supplied derivatives match the lifts") {
  const std::vector<AnalyticCircleMap> maps = {
      zigzag_pair(2, -1).f, zigzag_pair(2, -1).g, plateau_map(3, 2.0), deflation_pair(1, 2, 0.1).g,
      oscillator(2, 5), attainment_pair(1, 1.5).f, blaschke_pow(2, 0.2), bump_pair_s1(1e-2).f,
      bump_pair_s1(1e-2).g, multi_bump_s1(-2, 8), dense_onto_s1(1, 2), product_shift(2, -1).f};
  for (const auto& m : maps) {
    CHECK(sup_phase_derivative_error(m, 997) < 1e-4);
    CHECK(m.phase_at(kTwoPi) - m.phase_at(0.0) == doctest::Approx(kTwoPi * m.winding).epsilon(1e-12));
  }
}

TEST_CASE("deflation") {
  const auto f = plateau_map(2, 0.5);
  const auto psi = deflate_phase(f, 3, 0.5);
  CHECK(psi.winding == -1);
  CHECK_THROWS_AS(deflate_phase(analytic_power(1), 1, kPi), NotLocallyConstant);
  const auto relaxed = deflate_phase(analytic_power(1), 1, kPi, false);
  CHECK(relaxed.winding == 0);
  // Grid version agrees with the analytic one.
  const std::size_t M = 1 << 12;
  const auto grid = deflate_phase(f.sample(M), 3, 0.5);
  const auto exact = psi.sample(M);
  double err = 0.0;
  for (std::size_t j = 0; j < M; ++j) err = std::max(err, std::abs(grid[j] - exact[j]));
  CHECK(err < 1e-10);
}

TEST_CASE("oscillator total variation") {
  for (int n : {3, 6, 10}) {
    const auto osc = oscillator(2, n);
    CHECK(osc.winding == 2);
    // int |phi'| = 2 (n - 1) pi d1.
    const auto z = analytic_constant(0.0);
    CHECK(w1p_distance(osc, z, 1.0, 1 << 14) == doctest::Approx(2.0 * (n - 1) * kPi * 2).epsilon(1e-9));
  }
  CHECK_THROWS_AS(oscillator(1, 2), IndexOutOfRange);
}

TEST_CASE("T and S are inverse and T controls the chord") {
  for (double t = -3.1; t < 3.1; t += 0.05) {
    CHECK(s_phase(t_phase(t)) == doctest::Approx(t).epsilon(1e-12));
    CHECK(t_phase(s_phase(t)) == doctest::Approx(t).epsilon(1e-12));
    CHECK(std::abs(std::polar(1.0, t) - 1.0) == doctest::Approx(2.0 / kPi * std::fabs(t_phase(t))).epsilon(1e-12));
  }
  const auto f = power_map(1, 256);
  const auto back = compose_t(compose_s(f));
  for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(back[j] - f[j]) < 1e-12);
  CHECK(compose_s(f).piecewise());
}

TEST_CASE("attainment pair") {
  for (int d1 : {1, 2}) {
    for (double p : {1.25, 1.5, 1.75}) {
      const auto pr = attainment_pair(d1, p);
      CHECK(pr.f.winding == d1);
      CHECK(pr.g.winding == -d1);
      // |f' - g'| = 4 |d1| / pi pointwise, so the distance is explicit.
      const double expected = 4.0 * d1 / kPi * std::pow(kTwoPi, 1.0 / p);
      CHECK(w1p_distance(pr.f, pr.g, p, 1 << 14) == doctest::Approx(expected).epsilon(1e-6));
      for (double t = 0.01; t < kTwoPi; t += 0.1) {
        CHECK(std::fabs(std::real(pr.f.value_at(t) - pr.g.value_at(t))) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(attainment_pair(1, 2.0), IndexOutOfRange);
  CHECK_THROWS_AS(attainment_pair(1, 1.0), IndexOutOfRange);
}

TEST_CASE("Blaschke powers") {
  const std::size_t M = 1 << 12;
  for (int d : {1, 2, 3}) {
    const auto h = blaschke_pow(d, 0.2);
    CHECK(h.winding == -d);
    CHECK(degree_winding(lift(h.sample(M))) == -d);
    const double a = 0.8;
    for (double t = 0.0; t < kTwoPi; t += 0.3) {
      const cplx z = std::polar(1.0, t);
      const cplx direct = std::pow((z - a) / (a * z - 1.0), -d);
      CHECK(std::abs(h.value_at(t) - direct) < 1e-12);
    }
  }
  CHECK_THROWS_AS(blaschke_pow(1, 1.0), IndexOutOfRange);
}

TEST_CASE("bump pair degrees") {
  for (double eps : {1e-2, 1e-3}) {
    const auto pr = bump_pair_s1(eps);
    CHECK(pr.f.winding == 1);
    CHECK(pr.g.winding == 0);
    CHECK(std::lround(degree_kronecker_s1(pr.f)) == 1);
    CHECK(std::fabs(degree_kronecker_s1(pr.g)) < 1e-4);
  }
  CHECK_THROWS_AS(bump_pair_s1(0.5), IndexOutOfRange);
}

TEST_CASE("multi bump") {
  for (int d : {-3, 1, 4}) {
    const auto m = multi_bump_s1(d, 8);
    CHECK(m.winding == d);
    CHECK(degree_kronecker_s1(m) == doctest::Approx(d).epsilon(1e-10));
  }
  CHECK_THROWS_AS(multi_bump_s1(30, 4), Overcrowded);
}

TEST_CASE("dense onto maps come close to every point") {
  const int n = 4;
  const auto m = dense_onto_s1(2, n);
  CHECK(m.winding == 2);
  const auto f = m.sample(1 << 16);
  // Each degree-0 bump sweeps the full circle, so the image is all of S^1.
  for (double target = 0.0; target < kTwoPi; target += 0.25) {
    double best = 4.0;
    for (std::size_t j = 0; j < f.size(); ++j) best = std::min(best, std::abs(f[j] - std::polar(1.0, target)));
    CHECK(best < 1e-2);
  }
}

TEST_CASE("product shift") {
  for (auto [d1, d2] : {std::pair{2, -1}, {1, 3}, {0, 2}}) {
    const auto pr = product_shift(d1, d2);
    CHECK(pr.f.winding == d1);
    CHECK(pr.g.winding == d2);
    // f = g on Re z <= 0 where h = 1.
    for (double t = 0.5 * kPi; t <= 1.5 * kPi; t += 0.1) CHECK(std::abs(pr.f.value_at(t) - pr.g.value_at(t)) < 1e-12);
  }
}

TEST_CASE("plateau pair and wedge condition") {
  const auto pr = plateau_pair(1, 3, kPi);
  CHECK(w1p_distance(pr.f, pr.g, 1.0) == doctest::Approx(kTwoPi * 2).epsilon(1e-3));
  const auto w = wedge_diagnostics(pr.f);
  CHECK(w.wedge_holds);
  CHECK(w.min_wedge >= 0.0);
  CHECK(wedge_diagnostics(pr.g).wedge_holds);
  CHECK_FALSE(wedge_diagnostics(oscillator(1, 4)).wedge_holds);
}

TEST_CASE("registry") {
  CHECK(make_circle_map("power", {{"d", 3}}).winding == 3);
  CHECK(make_circle_map("blaschke", {{"d", 2}, {"delta", 0.4}}).winding == -2);
  CHECK(make_circle_map("zigzag", {{"d1", 2}, {"d2", 0}, {"side", 1}}).winding == 0);
  CHECK(make_pair("zigzag", {{"d1", 1}, {"d2", 0}}).claimed_value == doctest::Approx(4.0));
  CHECK_THROWS_AS(make_circle_map("power", {{"d", 1.5}}), InvalidMap);
  CHECK_THROWS_AS(make_circle_map("power", {{"d", 1}, {"bogus", 2}}), InvalidMap);
  CHECK_THROWS_AS(make_circle_map("nope", {}), InvalidMap);
  CHECK_THROWS_AS(make_pair("nope", {}), InvalidMap);
  for (const auto& name : pair_names()) CHECK_NOTHROW(make_pair(name, name == "zigzag" || name == "plateau" || name == "product-shift" ? Params{{"d1", 1}, {"d2", 0}} : Params{}));
  CHECK_FALSE(circle_map_names().empty());
}
