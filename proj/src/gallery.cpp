#include "hg/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hg/errors.hpp"

namespace hg {

namespace {

// theta reduced to (-pi, pi].
double centered(double theta) {
  double t = std::remainder(theta, kTwoPi);
  if (t <= -kPi) t += kTwoPi;
  return t;
}

int sign(int v) { return (v > 0) - (v < 0); }

void sort_unique(std::vector<double>& v) {
  for (double& x : v) x = std::clamp(x, 0.0, kTwoPi);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---- zigzag ---------------------------------------------------------------

GalleryPair zigzag_pair(int d1, int d2) {
  if (d1 == d2) throw IndexOutOfRange("zigzag_pair needs d1 != d2");
  if (d1 < d2) {
    GalleryPair swapped = zigzag_pair(d2, d1);
    std::swap(swapped.f, swapped.g);
    swapped.d1 = d1;
    swapped.d2 = d2;
    swapped.params = {{"d1", d1}, {"d2", d2}};
    return swapped;
  }
  const int d = d1 - d2;
  const double L = d + 1;
  const double split = kTwoPi * d / L;  // end of the zigzag part
  const double D1 = d1, D2 = d2;

  AnalyticCircleMap f;
  f.phase = [=](double t) { return t < split ? L * t : L * D2 * t + 2.0 * (D1 - L * D2) * kPi; };
  f.phase_derivative = [=](double t) { return t < split ? L : L * D2; };
  f.winding = d1;
  f.piecewise = true;

  AnalyticCircleMap g;
  const double period = kTwoPi / L;
  g.phase = [=](double t) {
    if (t >= split) return f.phase(t) - kTwoPi * d;
    const double u = t - period * std::floor(t / period);
    return u < 0.5 * period ? L * u : kTwoPi - L * u;
  };
  g.phase_derivative = [=](double t) {
    if (t >= split) return f.phase_derivative(t);
    const double u = t - period * std::floor(t / period);
    return u < 0.5 * period ? L : -L;
  };
  g.winding = d2;
  g.piecewise = true;

  std::vector<double> bp;
  for (int k = 0; k <= 2 * d; ++k) bp.push_back(kPi * k / L);
  sort_unique(bp);
  f.breakpoints = bp;
  g.breakpoints = bp;

  GalleryPair out{f, g, d1, d2, {{"d1", d1}, {"d2", d2}}, "W11 = 4|d1-d2|", 4.0 * d, 1.0};
  return out;
}

// ---- deflation --------------------------------------------------------------

AnalyticCircleMap plateau_map(int d, double a) {
  if (!(a > 0.0 && a < kTwoPi)) throw IndexOutOfRange("plateau_map needs 0 < a < 2 pi");
  const double D = d;
  const double span = kTwoPi - a;
  AnalyticCircleMap m;
  m.phase = [=](double t) { return t <= a ? 0.0 : kTwoPi * D * smooth_step((t - a) / span); };
  m.phase_derivative = [=](double t) {
    return t <= a ? 0.0 : kTwoPi * D * smooth_step_derivative((t - a) / span) / span;
  };
  m.winding = d;
  m.breakpoints = {a};
  return m;
}

AnalyticCircleMap deflate_phase(const AnalyticCircleMap& f, int d, double lambda,
                                bool require_plateau) {
  if (!(lambda > 0.0 && lambda < kTwoPi)) throw IndexOutOfRange("deflate_phase needs 0 < lambda < 2 pi");
  if (require_plateau) {
    const double base = f.phase(0.0);
    constexpr int kChecks = 1024;
    for (int i = 0; i <= kChecks; ++i) {
      const double t = lambda * i / kChecks;
      if (std::fabs(f.phase(t) - base) > 1e-9) {
        throw NotLocallyConstant("deflate_phase: map varies on [0, lambda]");
      }
    }
  }
  const double slope = kTwoPi * d / lambda;
  const double shift = kTwoPi * d;
  AnalyticCircleMap g;
  g.phase = [=](double t) { return t <= lambda ? f.phase(t) - slope * t : f.phase(t) - shift; };
  g.phase_derivative = [=](double t) {
    return t <= lambda ? f.phase_derivative(t) - slope : f.phase_derivative(t);
  };
  g.winding = f.winding - d;
  g.breakpoints = f.breakpoints;
  g.breakpoints.push_back(lambda);
  sort_unique(g.breakpoints);
  g.piecewise = true;
  return g;
}

CircleMap deflate_phase(const CircleMap& f, int d, double lambda, bool require_plateau) {
  if (!(lambda > 0.0 && lambda < kTwoPi)) throw IndexOutOfRange("deflate_phase needs 0 < lambda < 2 pi");
  Phase phi = lift(f);
  const std::size_t M = f.size();
  const double slope = kTwoPi * d / lambda;
  for (std::size_t j = 0; j < M; ++j) {
    const double t = grid_theta(j, M);
    if (t <= lambda && require_plateau && std::fabs(phi.values[j] - phi.values[0]) > 1e-9) {
      throw NotLocallyConstant("deflate_phase: map varies on [0, lambda]");
    }
  }
  for (std::size_t j = 0; j < M; ++j) {
    const double t = grid_theta(j, M);
    phi.values[j] -= t <= lambda ? slope * t : kTwoPi * d;
  }
  phi.winding -= d;
  return phi.exponentiate(true);
}

GalleryPair deflation_pair(int d1, int d, double lambda) {
  GalleryPair out;
  out.f = plateau_map(d1, lambda);
  out.g = deflate_phase(out.f, d, lambda);
  out.d1 = d1;
  out.d2 = d1 - d;
  out.params = {{"d1", d1}, {"d", d}, {"lambda", lambda}};
  out.claim = "W11 = 2 pi |d|";
  out.claimed_value = kTwoPi * std::abs(d);
  out.claimed_p = 1.0;
  return out;
}

// ---- oscillator -------------------------------------------------------------

AnalyticCircleMap oscillator(int d1, int n) {
  if (n < 3) throw IndexOutOfRange("oscillator needs n >= 3");
  const double up = static_cast<double>(d1) * n;
  const double down = -static_cast<double>(d1) * (n - 2);
  const double width = kPi / (static_cast<double>(n) * n);
  const double per_pair = (up + down) * width;  // 2 pi d1 / n^2
  AnalyticCircleMap m;
  m.phase = [=](double t) {
    const double pairs = std::floor(t / (2.0 * width));
    const double u = t - 2.0 * width * pairs;
    const double base = per_pair * pairs;
    return u < width ? base + up * u : base + up * width + down * (u - width);
  };
  m.phase_derivative = [=](double t) {
    const double u = t - 2.0 * width * std::floor(t / (2.0 * width));
    return u < width ? up : down;
  };
  m.winding = d1;
  m.piecewise = true;
  for (int k = 0; k < 2 * n * n; ++k) m.breakpoints.push_back(width * k);
  return m;
}

// ---- T and S ------------------------------------------------------------------

double t_phase(double theta) { return kPi * std::sin(0.5 * centered(theta)); }

double s_phase(double theta) {
  const double x = std::clamp(centered(theta) / kPi, -1.0, 1.0);
  return 2.0 * std::asin(x);
}

cplx t_map(cplx z) { return std::polar(1.0, t_phase(std::arg(z))); }
cplx s_map(cplx z) { return std::polar(1.0, s_phase(std::arg(z))); }

CircleMap compose_t(const CircleMap& f) {
  std::vector<cplx> s(f.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = t_map(f[j]);
  return CircleMap(std::move(s), f.piecewise());
}

CircleMap compose_s(const CircleMap& f) {
  std::vector<cplx> s(f.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = s_map(f[j]);
  // S has an unbounded derivative at -1, so the composite is not smooth.
  return CircleMap(std::move(s), true);
}

GalleryPair attainment_pair(int d1, double p) {
  if (!(p > 1.0 && p < 2.0)) throw IndexOutOfRange("attainment_pair needs 1 < p < 2");
  const int d = 2 * d1;
  const double D = d;
  // Lift of S o e^{i d theta}: with d theta = 2 pi k + r, r in [-pi, pi),
  // the phase is 2 pi k + 2 arcsin(r/pi); f takes half of it.
  auto split = [D](double t) {
    const double x = D * t;
    const double k = std::floor((x + kPi) / kTwoPi);
    return std::pair<double, double>{k, x - kTwoPi * k};
  };
  AnalyticCircleMap f;
  f.phase = [=](double t) {
    auto [k, r] = split(t);
    return 0.5 * (kTwoPi * k + 2.0 * std::asin(std::clamp(r / kPi, -1.0, 1.0)));
  };
  f.phase_derivative = [=](double t) {
    const double r = split(t).second / kPi;
    // Unbounded at r = +-1; clamp so grid samples stay finite.
    return D / (kPi * std::sqrt(std::max(1.0 - r * r, 1e-16)));
  };
  f.winding = d1;
  f.piecewise = true;
  for (int j = 0; j < std::abs(d); ++j) f.breakpoints.push_back((2.0 * j + 1.0) * kPi / std::abs(d));
  sort_unique(f.breakpoints);

  GalleryPair out;
  out.f = f;
  out.g = analytic_conjugate(f);
  out.d1 = d1;
  out.d2 = -d1;
  out.params = {{"d1", d1}, {"p", p}};
  out.claim = "W1p = 2^{1/p+1} pi^{1/p-1} |d1-d2|";
  out.claimed_value = std::pow(2.0, 1.0 / p + 1.0) * std::pow(kPi, 1.0 / p - 1.0) * std::abs(d);
  out.claimed_p = p;
  return out;
}

// ---- Blaschke powers ------------------------------------------------------------

AnalyticCircleMap blaschke_pow(int d, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw IndexOutOfRange("blaschke_pow needs 0 < delta < 1");
  const double a = 1.0 - delta;
  const double D = d;
  AnalyticCircleMap m;
  // (z - a)/(a z - 1) = -e^{i theta} (1 - a e^{-i theta})/(1 - a e^{i theta}); its lift is
  // pi + theta + 2 atan2(a sin theta, 1 - a cos theta), continuous since a < 1.
  m.phase = [=](double t) {
    if (d == 0) return 0.0;
    return -D * (kPi + t + 2.0 * std::atan2(a * std::sin(t), 1.0 - a * std::cos(t)));
  };
  m.phase_derivative = [=](double t) {
    if (d == 0) return 0.0;
    // 1 - 2a cos t + a^2 = (1-a)^2 + 4a sin^2(t/2), free of cancellation near t = 0.
    const double s = std::sin(0.5 * t);
    return -D * (1.0 - a * a) / (delta * delta + 4.0 * a * s * s);
  };
  m.winding = -d;
  return m;
}

// ---- capacity bumps -------------------------------------------------------------

namespace {

// Lift of theta -> -pi/2 + sgn(x) P(|x|), x = theta reduced to (-pi, pi], with
// P(0) = 0 and P constant = P_end near pi.  winding = P_end/pi.
AnalyticCircleMap radial_phase_s1(std::function<double(double)> P, std::function<double(double)> dP,
                                  int winding, std::vector<double> radii) {
  AnalyticCircleMap m;
  const double end = kPi * winding;
  m.phase = [=](double t) {
    if (t <= kPi) return -0.5 * kPi + P(t);
    return -0.5 * kPi - P(kTwoPi - t) + 2.0 * end;
  };
  m.phase_derivative = [=](double t) { return t <= kPi ? dP(t) : dP(kTwoPi - t); };
  m.winding = winding;
  for (double r : radii) {
    m.breakpoints.push_back(r);
    m.breakpoints.push_back(kTwoPi - r);
  }
  sort_unique(m.breakpoints);
  return m;
}

}  // namespace

GalleryPair bump_pair_s1(double eps) {
  const CapacityProfiles prof(eps);
  // Geometric breakpoints so that composite rules grade towards the centre.
  std::vector<double> radii{eps / 4.0, 0.75 * eps, eps, std::sqrt(eps)};
  for (double r = eps / 64.0; r < std::sqrt(eps); r *= 2.0) radii.push_back(r);
  GalleryPair out;
  out.f = radial_phase_s1([prof](double r) { return prof.F(r); },
                          [prof](double r) { return prof.F_derivative(r); }, 1, radii);
  out.g = radial_phase_s1([prof](double r) { return prof.G(r); },
                          [prof](double r) { return prof.G_derivative(r); }, 0, radii);
  out.d1 = 1;
  out.d2 = 0;
  out.params = {{"eps", eps}};
  out.claim = "critical norm of f-g -> 0 as eps -> 0";
  return out;
}

// ---- multi-bump and dense maps -----------------------------------------------------

namespace {

struct BumpSet {
  std::vector<double> centers;
  std::vector<int> kinds;  // +1 / -1: degree bump, 0: onto bump of degree 0
  double radius = 0.0;
};

AnalyticCircleMap bump_map(const BumpSet& b) {
  const BumpSet set = b;
  auto local = [set](double t, std::size_t i, double& dvalue) {
    const double u = (t - (set.centers[i] - set.radius)) / (2.0 * set.radius);
    const double du = 1.0 / (2.0 * set.radius);
    if (set.kinds[i] != 0) {
      dvalue = set.kinds[i] * kTwoPi * smooth_step_derivative(u) * du;
      return set.kinds[i] * kTwoPi * smooth_step(u);
    }
    // Up to 2 pi on the first half, back to 0 on the second half.
    if (u <= 0.5) {
      dvalue = kTwoPi * smooth_step_derivative(2.0 * u) * 2.0 * du;
      return kTwoPi * smooth_step(2.0 * u);
    }
    dvalue = -kTwoPi * smooth_step_derivative(2.0 - 2.0 * u) * 2.0 * du;
    return kTwoPi * smooth_step(2.0 - 2.0 * u);
  };
  int winding = 0;
  for (int k : set.kinds) winding += k;
  AnalyticCircleMap m;
  m.phase = [set, local](double t) {
    double v = 0.0, dv = 0.0;
    for (std::size_t i = 0; i < set.centers.size(); ++i) {
      if (t >= set.centers[i] + set.radius) {
        v += set.kinds[i] * kTwoPi;
      } else if (t > set.centers[i] - set.radius) {
        v += local(t, i, dv);
      }
    }
    return v;
  };
  m.phase_derivative = [set, local](double t) {
    double dv = 0.0;
    for (std::size_t i = 0; i < set.centers.size(); ++i) {
      if (t > set.centers[i] - set.radius && t < set.centers[i] + set.radius) {
        local(t, i, dv);
        return dv;
      }
    }
    return 0.0;
  };
  m.winding = winding;
  for (double c : set.centers) {
    m.breakpoints.push_back(c - set.radius);
    m.breakpoints.push_back(c);
    m.breakpoints.push_back(c + set.radius);
  }
  sort_unique(m.breakpoints);
  return m;
}

}  // namespace

AnalyticCircleMap multi_bump_s1(int d, int n) {
  if (d == 0) throw IndexOutOfRange("multi_bump needs d != 0");
  if (n < 1) throw IndexOutOfRange("multi_bump needs n >= 1");
  const int count = std::abs(d);
  BumpSet set;
  set.radius = 1.0 / n;
  if (2.0 * set.radius * count > kTwoPi) throw Overcrowded("multi_bump: bumps overlap");
  for (int j = 0; j < count; ++j) {
    set.centers.push_back(kTwoPi * (j + 0.5) / count);
    set.kinds.push_back(sign(d));
  }
  return bump_map(set);
}

AnalyticCircleMap dense_onto_s1(int d1, int n) {
  if (n < 1) throw IndexOutOfRange("dense_onto needs n >= 1");
  const int J = static_cast<int>(std::floor(3.0 * kPi * n));
  if (J < std::abs(d1)) throw Overcrowded("dense_onto: fewer balls than |d1|");
  BumpSet set;
  set.radius = 1.0 / (3.0 * n);
  // J balls of radius 1/(3n) fit since 2 J/(3n) <= 2 pi.
  for (int j = 0; j < J; ++j) {
    set.centers.push_back(kTwoPi * (j + 0.5) / J);
    set.kinds.push_back(j < std::abs(d1) ? sign(d1) : 0);
  }
  return bump_map(set);
}

// ---- product shift -------------------------------------------------------------------

GalleryPair product_shift(int d1, int d2) {
  // h winds once across theta in (-pi/2, pi/2) and is 1 on the left half circle.
  AnalyticCircleMap h;
  h.phase = [](double t) {
    if (t <= 0.5 * kPi) return kTwoPi * smooth_step((t + 0.5 * kPi) / kPi);
    if (t <= 1.5 * kPi) return kTwoPi;
    return kTwoPi + kTwoPi * smooth_step((t - 1.5 * kPi) / kPi);
  };
  h.phase_derivative = [](double t) {
    if (t <= 0.5 * kPi) return 2.0 * smooth_step_derivative((t + 0.5 * kPi) / kPi);
    if (t <= 1.5 * kPi) return 0.0;
    return 2.0 * smooth_step_derivative((t - 1.5 * kPi) / kPi);
  };
  h.winding = 1;
  h.breakpoints = {0.5 * kPi, 1.5 * kPi};

  // g winds d2 times across the left half circle and is 1 on the right half.
  const double D2 = d2;
  AnalyticCircleMap g;
  g.phase = [D2](double t) {
    if (t <= 0.5 * kPi) return 0.0;
    if (t <= 1.5 * kPi) return kTwoPi * D2 * smooth_step((t - 0.5 * kPi) / kPi);
    return kTwoPi * D2;
  };
  g.phase_derivative = [D2](double t) {
    if (t <= 0.5 * kPi || t > 1.5 * kPi) return 0.0;
    return 2.0 * D2 * smooth_step_derivative((t - 0.5 * kPi) / kPi);
  };
  g.winding = d2;
  g.breakpoints = {0.5 * kPi, 1.5 * kPi};

  const int d = d1 - d2;
  const double D = d;
  AnalyticCircleMap hd = h;
  hd.phase = [h, D](double t) { return D * h.phase(t); };
  hd.phase_derivative = [h, D](double t) { return D * h.phase_derivative(t); };
  hd.winding = d;

  GalleryPair out;
  out.f = analytic_product(hd, g);
  out.g = g;
  out.d1 = d1;
  out.d2 = d2;
  out.params = {{"d1", d1}, {"d2", d2}};
  out.claim = "|f-g|_{W^{s,p}} <~ |d1-d2|^s";
  return out;
}

// ---- plateau pair and wedge diagnostics ------------------------------------------------

GalleryPair plateau_pair(int d1, int d2, double a) {
  if (!(a > 0.0 && a < kTwoPi)) throw IndexOutOfRange("plateau_pair needs 0 < a < 2 pi");
  const double D1 = d1, D2 = d2;
  AnalyticCircleMap f;
  f.phase = [=](double t) { return t <= a ? kTwoPi * D1 * smooth_step(t / a) : kTwoPi * D1; };
  f.phase_derivative = [=](double t) {
    return t <= a ? kTwoPi * D1 * smooth_step_derivative(t / a) / a : 0.0;
  };
  f.winding = d1;
  f.breakpoints = {a};

  AnalyticCircleMap g;
  const double slope = kTwoPi * (D2 - D1) / (kTwoPi - a);
  g.phase = [=](double t) { return t <= a ? f.phase(t) : kTwoPi * D1 + slope * (t - a); };
  g.phase_derivative = [=](double t) { return t <= a ? f.phase_derivative(t) : slope; };
  g.winding = d2;
  g.breakpoints = {a};
  g.piecewise = true;

  GalleryPair out;
  out.f = f;
  out.g = g;
  out.d1 = d1;
  out.d2 = d2;
  out.params = {{"d1", d1}, {"d2", d2}, {"a", a}};
  out.claim = "W11 = 2 pi |d2-d1|";
  out.claimed_value = kTwoPi * std::abs(d2 - d1);
  out.claimed_p = 1.0;
  return out;
}

WedgeReport wedge_diagnostics(const AnalyticCircleMap& f, std::size_t M) {
  // f ^ f' = Im(conj(f) f') = phi'.
  const auto w = f.sample_phase_derivative(M);
  WedgeReport r;
  r.min_wedge = *std::min_element(w.begin(), w.end());
  r.max_wedge = *std::max_element(w.begin(), w.end());
  r.wedge_holds = true;
  for (double v : w) {
    if (f.winding * v < -1e-12) {
      r.wedge_holds = false;
      break;
    }
  }
  return r;
}

// ---- registry ---------------------------------------------------------------------------

namespace {

class ParamReader {
 public:
  ParamReader(const std::string& name, const Params& p) : name_(name), params_(p) {}

  double real(const std::string& key, double fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }
  double real(const std::string& key) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) throw InvalidMap(name_ + ": missing parameter '" + key + "'");
    return it->second;
  }
  int integer(const std::string& key, int fallback) { return to_int(key, real(key, fallback)); }
  int integer(const std::string& key) { return to_int(key, real(key)); }

  void finish() const {
    for (const auto& [k, v] : params_) {
      if (!used_.count(k)) throw InvalidMap(name_ + ": unknown parameter '" + k + "'");
    }
  }

 private:
  int to_int(const std::string& key, double v) const {
    if (v != std::round(v) || std::fabs(v) > 1e6) {
      throw InvalidMap(name_ + ": parameter '" + key + "' must be an integer");
    }
    return static_cast<int>(v);
  }

  std::string name_;
  const Params& params_;
  std::set<std::string> used_;
};

const AnalyticCircleMap& pick(const GalleryPair& pair, int side) {
  if (side != 0 && side != 1) throw InvalidMap("side must be 0 (f) or 1 (g)");
  return side == 0 ? pair.f : pair.g;
}

}  // namespace

GalleryPair make_pair(const std::string& name, const Params& params) {
  ParamReader r(name, params);
  GalleryPair out;
  if (name == "zigzag") {
    out = zigzag_pair(r.integer("d1"), r.integer("d2"));
  } else if (name == "deflate") {
    const int d1 = r.integer("d1", 1);
    out = deflation_pair(d1, r.integer("d", d1), r.real("lambda", 0.1));
  } else if (name == "attainment") {
    out = attainment_pair(r.integer("d1", 1), r.real("p", 1.5));
  } else if (name == "plateau") {
    out = plateau_pair(r.integer("d1"), r.integer("d2"), r.real("a", kPi));
  } else if (name == "product-shift") {
    // Either d1 or the degree gap d = d1 - d2.
    if (params.count("d") && params.count("d1")) throw InvalidMap("product-shift: give d1 or d, not both");
    const int d2 = r.integer("d2", 0);
    const int d = r.integer("d", 1);
    out = product_shift(r.integer("d1", d2 + d), d2);
  } else if (name == "bump") {
    out = bump_pair_s1(r.real("eps", 1e-3));
  } else {
    throw InvalidMap("unknown pair '" + name + "'");
  }
  r.finish();
  return out;
}

AnalyticCircleMap make_circle_map(const std::string& name, const Params& params) {
  for (const auto& pair : pair_names()) {
    if (name == pair && name != "plateau" && name != "deflate") {
      Params rest = params;
      const int side = rest.count("side") ? static_cast<int>(rest["side"]) : 0;
      rest.erase("side");
      return pick(hg::make_pair(name, rest), side);
    }
  }
  ParamReader r(name, params);
  AnalyticCircleMap out;
  if (name == "power") {
    out = analytic_power(r.integer("d"));
  } else if (name == "constant") {
    out = analytic_constant(r.real("c", 0.0));
  } else if (name == "blaschke") {
    out = blaschke_pow(r.integer("d"), r.real("delta"));
  } else if (name == "oscillator") {
    out = oscillator(r.integer("d1", 1), r.integer("n"));
  } else if (name == "plateau") {
    out = plateau_map(r.integer("d"), r.real("a", kPi));
  } else if (name == "deflate") {
    const int d1 = r.integer("d1", 1);
    const double lambda = r.real("lambda", 0.1);
    out = deflate_phase(plateau_map(d1, lambda), r.integer("d", d1), lambda);
  } else if (name == "multibump") {
    out = multi_bump_s1(r.integer("d"), r.integer("n", 16));
  } else if (name == "dense") {
    out = dense_onto_s1(r.integer("d1"), r.integer("n", 8));
  } else {
    throw InvalidMap("unknown circle map '" + name + "'");
  }
  r.finish();
  return out;
}

std::vector<std::string> circle_map_names() {
  return {"power",  "constant", "blaschke",  "oscillator", "plateau", "deflate",      "zigzag",
          "attainment", "bump", "multibump", "dense", "product-shift"};
}

std::vector<std::string> pair_names() {
  return {"zigzag", "deflate", "attainment", "plateau", "product-shift", "bump"};
}

}  // namespace hg
