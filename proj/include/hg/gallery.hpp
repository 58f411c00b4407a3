#pragma once

// Explicit circle-map constructions: extremal pairs for the W^{1,p}
// distances, phase deflation, oscillators, the T/S reparametrizations,
// Blaschke powers, capacity bumps, multi-bump and dense maps, and a
// string-keyed registry over all of them.

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hg/analytic_map.hpp"
#include "hg/grid_core.hpp"
#include "hg/profiles.hpp"

namespace hg {

using Params = std::map<std::string, double>;

/// Two maps with declared degrees and the distance the construction is built
/// to realize.
struct GalleryPair {
  AnalyticCircleMap f;
  AnalyticCircleMap g;
  int d1 = 0;
  int d2 = 0;
  Params params;
  /// Human-readable description of the expected value, e.g. "W11 = 4|d1-d2|".
  std::string claim;
  double claimed_value = std::numeric_limits<double>::quiet_NaN();
  /// Exponent p of the W^{1,p} distance the claim refers to (NaN if none).
  double claimed_p = std::numeric_limits<double>::quiet_NaN();
};

/// Piecewise-linear pair with W^{1,1} distance exactly 4|d1 - d2|.
/// Throws IndexOutOfRange if d1 == d2.
GalleryPair zigzag_pair(int d1, int d2);

/// Smooth map of degree d whose phase is 0 on [0, a] and rises by 2 pi d
/// through a smooth step on [a, 2 pi].
AnalyticCircleMap plateau_map(int d, double a);

/// Subtracts 2 pi d of winding on [0, lambda]: psi = phi - (2 pi d/lambda) theta
/// there and phi - 2 pi d beyond.  With require_plateau, throws
/// NotLocallyConstant unless f is constant on [0, lambda] to 1e-9.
AnalyticCircleMap deflate_phase(const AnalyticCircleMap& f, int d, double lambda,
                                bool require_plateau = true);
CircleMap deflate_phase(const CircleMap& f, int d, double lambda, bool require_plateau = true);

/// plateau_map(d1, lambda) paired with its deflation by d; W^{1,1} = 2 pi |d|.
GalleryPair deflation_pair(int d1, int d, double lambda);

/// Phase slopes d1 n and -d1 (n - 2) alternating on 2 n^2 intervals of
/// length pi/n^2.  Throws IndexOutOfRange if n < 3.
AnalyticCircleMap oscillator(int d1, int n);

// ---- T and S --------------------------------------------------------------

/// T: theta -> pi sin(theta/2) with theta reduced to (-pi, pi].
double t_phase(double theta);
/// S = T^{-1}: theta -> 2 arcsin(theta/pi) with theta reduced to (-pi, pi].
double s_phase(double theta);
cplx t_map(cplx z);
cplx s_map(cplx z);
/// Post-composition z -> T(z) applied samplewise.
CircleMap compose_t(const CircleMap& f);
CircleMap compose_s(const CircleMap& f);

/// f = square root of S o e^{i 2 d1 theta} (half phase), g = conj f.
/// |f' - g'| is the constant 4|d1|/pi.  Throws IndexOutOfRange unless 1 < p < 2.
GalleryPair attainment_pair(int d1, double p);

/// ((z - (1-delta))/((1-delta) z - 1))^{-d}, evaluated through its closed-form
/// lift.  Degree -d.  Throws IndexOutOfRange unless 0 < delta < 1.
AnalyticCircleMap blaschke_pow(int d, double delta);

/// One-dimensional capacity bump pair centered at theta = 0:
/// phases -pi/2 + sgn(x) F(|x|) and -pi/2 + sgn(x) G(|x|); degrees 1 and 0.
GalleryPair bump_pair_s1(double eps);

/// |d| degree-sign(d) bumps of radius 1/n with equally spaced centers; phase
/// 2 pi smooth_step across each ball.  Throws Overcrowded if they overlap.
AnalyticCircleMap multi_bump_s1(int d, int n);

/// floor(3 pi n) balls of radius 1/(3n): the first |d1| carry degree
/// sign(d1) bumps, the rest degree-0 bumps whose phase climbs to 2 pi and back.
AnalyticCircleMap dense_onto_s1(int d1, int n);

/// h in E_1 equal to 1 on Re z <= 0 and g in E_{d2} equal to 1 on Re z >= 0;
/// returns (f, g) with f = h^{d1-d2} g.
GalleryPair product_shift(int d1, int d2);

/// Two-piece pair with a plateau: f winds d1 on [0, a] and is constant after,
/// g = f on [0, a] and winds linearly by d2 - d1 after; W^{1,1} = 2 pi |d2 - d1|.
GalleryPair plateau_pair(int d1, int d2, double a = kPi);

struct WedgeReport {
  double min_wedge = 0.0;  // min of f ^ f' over the grid
  double max_wedge = 0.0;
  /// d1 (f ^ f') >= 0 everywhere on the grid (to 1e-12).
  bool wedge_holds = false;
};

WedgeReport wedge_diagnostics(const AnalyticCircleMap& f, std::size_t M = kDefaultGridM);

// ---- registry -------------------------------------------------------------

/// Circle maps by name: power, constant, blaschke, oscillator, plateau,
/// deflate, zigzag, attainment, bump, multibump, dense, product-shift.
/// Pair members are selected with side=0 (f) or side=1 (g).
AnalyticCircleMap make_circle_map(const std::string& name, const Params& params);

/// Pairs by name: zigzag, deflate, attainment, plateau, product-shift, bump.
GalleryPair make_pair(const std::string& name, const Params& params);

std::vector<std::string> circle_map_names();
std::vector<std::string> pair_names();

}  // namespace hg
