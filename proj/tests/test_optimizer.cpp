#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hg/errors.hpp"
#include "hg/gallery.hpp"
#include "hg/optimizer.hpp"
#include "hg/seminorms.hpp"

using namespace hg;

namespace {

OptimizeBudget small_budget() {
  OptimizeBudget b;
  b.modes = 4;
  b.restarts = 2;
  b.iterations = 200;
  b.grid = 256;
  return b;
}

}  // namespace

TEST_CASE("phase ansatz round trip") {
  PhaseAnsatz a;
  a.winding = 2;
  a.c0 = 0.3;
  a.a = {0.5, -0.2, 0.1};
  a.b = {0.0, 0.4, -0.3};
  std::vector<double> psi, dpsi;
  a.evaluate(256, psi, dpsi);
  for (std::size_t j = 0; j < 256; j += 17) {
    const double t = grid_theta(j, 256);
    double v = 2 * t + 0.3, dv = 2.0;
    for (int k = 1; k <= 3; ++k) {
      v += a.a[k - 1] * std::cos(k * t) + a.b[k - 1] * std::sin(k * t);
      dv += k * (-a.a[k - 1] * std::sin(k * t) + a.b[k - 1] * std::cos(k * t));
    }
    CHECK(psi[j] == doctest::Approx(v).epsilon(1e-12));
    CHECK(dpsi[j] == doctest::Approx(dv).epsilon(1e-12));
  }
  const auto back = PhaseAnsatz::project(psi, 2, 3);
  CHECK(back.c0 == doctest::Approx(0.3).epsilon(1e-12));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(back.a[k] == doctest::Approx(a.a[k]).epsilon(1e-12));
    CHECK(back.b[k] == doctest::Approx(a.b[k]).epsilon(1e-12));
  }
  CHECK(degree_winding(lift(a.exponentiate(256))) == 2);
}

TEST_CASE("class distance formula") {
  CHECK(w1p_class_distance(0, 1, 1.0) == doctest::Approx(4.0));
  CHECK(w1p_class_distance(0, 1, 2.0) == doctest::Approx(2.0 * std::sqrt(2.0 / kPi)));
  CHECK(w1p_class_distance(3, 1, 1.0) == doctest::Approx(8.0));
}

TEST_CASE("unsupported indices and budgets are rejected") {
  const auto f = analytic_power(0);
  CHECK_THROWS_AS(estimate_inf_distance(f, 1, SobolevIndex(0.3, 2.0), small_budget()), IndexOutOfRange);
  auto b = small_budget();
  b.modes = 100;
  CHECK_THROWS_AS(estimate_inf_distance(f, 1, SobolevIndex(1.0, 1.0), b), IndexOutOfRange);
  CHECK_THROWS_AS(estimate_point_to_class(zigzag_pair(1, 0).f.sample(256), 0, SobolevIndex(1.0, 1.0), small_budget()),
                  MissingDerivative);
}

TEST_CASE("runs are deterministic for a fixed seed") {
  const auto f = analytic_power(1);
  const auto a = estimate_inf_distance(f, 0, SobolevIndex(1.0, 1.5), small_budget());
  const auto b = estimate_inf_distance(f, 0, SobolevIndex(1.0, 1.5), small_budget());
  CHECK(a.optimizer_value == b.optimizer_value);
  CHECK(a.parameters == b.parameters);
  REQUIRE(a.trace.size() == b.trace.size());
  auto c = small_budget();
  c.seed = 99;
  const auto d = estimate_inf_distance(f, 0, SobolevIndex(1.0, 1.5), c);
  CHECK(d.restarts_used == 2);
}

TEST_CASE("inf distance never beats the class bound") {
  for (double p : {1.0, 1.5, 2.0}) {
    const auto r = estimate_inf_distance(analytic_power(0), 1, SobolevIndex(1.0, p), small_budget());
    CHECK(r.optimizer_value >= r.target * (1.0 - 1e-3));
    CHECK(r.optimizer_value <= r.target * 1.3);
    CHECK(r.best_value <= r.optimizer_value);
    CHECK(r.witness == "zigzag");
    // The reported samples reproduce the reported value.
    const CircleMap f(r.f_samples), g(r.g_samples);
    CHECK(w1p_distance(f, g, p) == doctest::Approx(r.optimizer_value).epsilon(1e-6));
    CHECK(degree_winding(lift(f)) == 0);
    CHECK(degree_winding(lift(g)) == 1);
  }
}

TEST_CASE("attainment witness for opposite degrees") {
  const auto r = estimate_inf_distance(analytic_power(1), -1, SobolevIndex(1.0, 1.5), small_budget());
  CHECK(r.witness == "attainment");
  CHECK(r.witness_value == doctest::Approx(r.target).epsilon(1e-6));
}

TEST_CASE("H^1/2 point to class reaches the Fourier bound") {
  const auto r = estimate_point_to_class(analytic_power(0), 1, SobolevIndex(0.5, 2.0), small_budget());
  CHECK(r.optimizer_value >= kTwoPi * (1.0 - 1e-9));
  CHECK(r.optimizer_value == doctest::Approx(kTwoPi).epsilon(1e-3));
}

TEST_CASE("H^1/2 classes come close when both maps move") {
  auto b = small_budget();
  b.modes = 8;
  b.grid = 512;
  const auto r = estimate_inf_distance(analytic_power(0), 1, SobolevIndex(0.5, 2.0), b);
  CHECK(r.optimizer_value < kTwoPi);
  CHECK(r.target == 0.0);
}

TEST_CASE("same class gives zero") {
  const auto r = estimate_point_to_class(analytic_power(2), 2, SobolevIndex(1.0, 1.0), small_budget());
  CHECK(r.best_value == 0.0);
  CHECK(r.optimizer_value < 1e-6);
}

TEST_CASE("attainment probe levels") {
  auto b = small_budget();
  b.modes = 2;
  const auto pr = attainment_probe(1, -1, 1.5, {b, b.scaled(2)});
  REQUIRE(pr.levels.size() == 2);
  CHECK(pr.levels[1].budget.modes == 4);
  CHECK(pr.levels[1].budget.iterations == 400);
  CHECK(pr.bound == doctest::Approx(w1p_class_distance(1, -1, 1.5)));
  CHECK(std::isfinite(pr.distance_to_constructed));
  CHECK(std::isnan(attainment_probe(0, 1, 2.0, {b}).distance_to_constructed));
  CHECK_THROWS_AS(attainment_probe(0, 1, 0.5, {b}), IndexOutOfRange);
}
