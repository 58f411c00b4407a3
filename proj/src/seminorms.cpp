#include "hg/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/gauss_rule.hpp"
#include "detail/summation.hpp"
#include "hg/errors.hpp"

namespace hg {

namespace {

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw IndexOutOfRange("p must be >= 1");
}

void require_fractional(double s, double p) {
  if (!(s > 0.0 && s < 1.0)) throw IndexOutOfRange("Gagliardo semi-norm needs 0 < s < 1");
  require_p(p);
}

inline double pow_abs(double r2, double p) {
  // r2 is a squared modulus.
  if (p == 2.0) return r2;
  if (p == 1.0) return std::sqrt(r2);
  return std::pow(r2, 0.5 * p);
}

double kernel_dist(double d, KernelDistance kernel) {
  d = std::fabs(d);
  d = std::fmod(d, kTwoPi);
  if (d > kPi) d = kTwoPi - d;
  return kernel == KernelDistance::arc ? d : 2.0 * std::sin(0.5 * d);
}

}  // namespace

// ---- W^{1,p} --------------------------------------------------------------

double w1p_distance(const CircleMap& f, const CircleMap& g, double p) {
  require_same_grid(f.size(), g.size(), "w1p_distance");
  if (f.piecewise() || g.piecewise()) {
    throw MissingDerivative("w1p_distance: piecewise map needs an analytic derivative");
  }
  const auto df = spectral_derivative(f.samples());
  const auto dg = spectral_derivative(g.samples());
  return w1p_distance(f, g, p, df, dg);
}

double w1p_distance(const CircleMap& f, const CircleMap& g, double p, std::span<const cplx> df,
                    std::span<const cplx> dg) {
  require_p(p);
  require_same_grid(f.size(), g.size(), "w1p_distance");
  require_same_grid(f.size(), df.size(), "w1p_distance");
  require_same_grid(f.size(), dg.size(), "w1p_distance");
  detail::NeumaierSum sum;
  for (std::size_t j = 0; j < df.size(); ++j) sum.add(pow_abs(std::norm(df[j] - dg[j]), p));
  return std::pow(sum.value() * kTwoPi / static_cast<double>(df.size()), 1.0 / p);
}

double w1p_distance(const AnalyticCircleMap& f, const AnalyticCircleMap& g, double p,
                    std::size_t cells) {
  require_p(p);
  static const detail::GaussRule rule = detail::gauss_rule<8>();
  const auto bp = merged_breakpoints(f, g);
  const double cell_width = kTwoPi / static_cast<double>(std::max<std::size_t>(cells, 1));
  detail::NeumaierSum sum;
  std::vector<double> x, w;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i], b = bp[i + 1];
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / cell_width)));
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t c = 0; c < n; ++c) {
      const double lo = a + h * static_cast<double>(c);
      const double hi = (c + 1 == n) ? b : lo + h;
      detail::map_rule(rule, lo, hi, x, w);
      for (std::size_t q = 0; q < x.size(); ++q) {
        sum.add(w[q] * pow_abs(std::norm(f.tangent_at(x[q]) - g.tangent_at(x[q])), p));
      }
    }
  }
  return std::pow(sum.value(), 1.0 / p);
}

double w1p_energy(const CircleMap& f, double p) {
  require_p(p);
  if (f.piecewise()) throw MissingDerivative("w1p_energy: piecewise map needs an analytic derivative");
  const auto df = spectral_derivative(f.samples());
  detail::NeumaierSum sum;
  for (const cplx& v : df) sum.add(pow_abs(std::norm(v), p));
  return sum.value() * kTwoPi / static_cast<double>(df.size());
}

// ---- Gagliardo on a uniform grid -------------------------------------------

double gagliardo_seminorm(std::span<const cplx> h, double s, double p, KernelDistance kernel) {
  require_fractional(s, p);
  const std::size_t M = h.size();
  validate_grid_size(M);
  const double dtheta = kTwoPi / static_cast<double>(M);
  const double expo = 1.0 + s * p;
  detail::NeumaierSum total;
  // Offsets k and M - k give the same inner sum; count them together.
  for (std::size_t k = 1; k <= M / 2; ++k) {
    detail::NeumaierSum inner;
    for (std::size_t i = 0; i < M; ++i) {
      inner.add(pow_abs(std::norm(h[i] - h[(i + k) % M]), p));
    }
    const double dist = kernel_dist(dtheta * static_cast<double>(k), kernel);
    const double mult = (k == M / 2) ? 1.0 : 2.0;
    total.add(mult * inner.value() / std::pow(dist, expo));
  }
  return std::pow(total.value() * dtheta * dtheta, 1.0 / p);
}

double gagliardo_seminorm(std::span<const double> h, double s, double p, KernelDistance kernel) {
  std::vector<cplx> c(h.begin(), h.end());
  return gagliardo_seminorm(c, s, p, kernel);
}

// ---- Gagliardo on a graded mesh ---------------------------------------------

GradedMesh graded_mesh(double center, double r_min, double ratio, double h_max) {
  if (!(r_min > 0.0) || !(ratio > 1.0) || !(h_max > 0.0)) {
    throw IndexOutOfRange("graded_mesh: need r_min > 0, ratio > 1, h_max > 0");
  }
  std::vector<double> radii{0.0};
  double r = std::min(r_min, kPi);
  while (r < kPi) {
    radii.push_back(r);
    r += std::min(r * (ratio - 1.0), h_max);
  }
  // Merge a short last element into its neighbour.
  if (kPi - radii.back() < 0.5 * (radii.back() - radii[radii.size() - 2]) && radii.size() > 2) {
    radii.pop_back();
  }
  radii.push_back(kPi);
  GradedMesh mesh;
  mesh.center = center;
  for (std::size_t i = radii.size(); i-- > 1;) mesh.nodes.push_back(center - radii[i]);
  for (double rr : radii) mesh.nodes.push_back(center + rr);
  return mesh;
}

double gagliardo_seminorm_graded(const std::function<cplx(double)>& h, const GradedMesh& mesh,
                                 double s, double p, KernelDistance kernel) {
  require_fractional(s, p);
  const std::size_t E = mesh.elements();
  if (E < 2) throw IndexOutOfRange("graded mesh needs at least two elements");
  static const detail::GaussRule coarse = detail::gauss_rule<6>();
  static const detail::GaussRule fine = detail::gauss_rule<20>();
  const double expo = 1.0 + s * p;

  struct Element {
    std::vector<double> x, w, xf, wf;
    std::vector<cplx> v, vf;
  };
  std::vector<Element> el(E);
  std::vector<cplx> node_val(mesh.nodes.size());
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) node_val[i] = h(mesh.nodes[i]);
  for (std::size_t e = 0; e < E; ++e) {
    auto& q = el[e];
    detail::map_rule(coarse, mesh.nodes[e], mesh.nodes[e + 1], q.x, q.w);
    detail::map_rule(fine, mesh.nodes[e], mesh.nodes[e + 1], q.xf, q.wf);
    q.v.resize(q.x.size());
    q.vf.resize(q.xf.size());
    for (std::size_t i = 0; i < q.x.size(); ++i) q.v[i] = h(q.x[i]);
    for (std::size_t i = 0; i < q.xf.size(); ++i) q.vf[i] = h(q.xf[i]);
  }

  auto pair_sum = [&](const std::vector<double>& xa, const std::vector<double>& wa,
                      const std::vector<cplx>& va, const std::vector<double>& xb,
                      const std::vector<double>& wb, const std::vector<cplx>& vb) {
    double acc = 0.0;
    for (std::size_t i = 0; i < xa.size(); ++i) {
      for (std::size_t j = 0; j < xb.size(); ++j) {
        const double dist = kernel_dist(xa[i] - xb[j], kernel);
        acc += wa[i] * wb[j] * pow_abs(std::norm(va[i] - vb[j]), p) / std::pow(dist, expo);
      }
    }
    return acc;
  };

  detail::NeumaierSum total;
  const double a = p - 1.0 - s * p;
  for (std::size_t e = 0; e < E; ++e) {
    // Same element: |h'|^p int int |x-y|^a over I x I, h' from the endpoints.
    const double len = mesh.nodes[e + 1] - mesh.nodes[e];
    const double slope2 = std::norm(node_val[e + 1] - node_val[e]) / (len * len);
    total.add(2.0 * pow_abs(slope2, p) * std::pow(len, a + 2.0) / ((a + 1.0) * (a + 2.0)));
    for (std::size_t f = e + 1; f < E; ++f) {
      const bool adjacent = (f == e + 1) || (e == 0 && f == E - 1);
      const double v = adjacent
                           ? pair_sum(el[e].xf, el[e].wf, el[e].vf, el[f].xf, el[f].wf, el[f].vf)
                           : pair_sum(el[e].x, el[e].w, el[e].v, el[f].x, el[f].w, el[f].v);
      total.add(2.0 * v);
    }
  }
  return std::pow(total.value(), 1.0 / p);
}

// ---- H^{1/2}, sup, identity -------------------------------------------------

double h_half_seminorm_sq(std::span<const cplx> h) {
  const FourierSeries F = fourier(h);
  detail::NeumaierSum sum;
  for (std::size_t k = 0; k < F.size(); ++k) {
    sum.add(std::fabs(static_cast<double>(F.frequency(k))) * std::norm(F.raw()[k]));
  }
  return 4.0 * kPi * kPi * sum.value();
}

double sup_distance(const CircleMap& f, const CircleMap& g) {
  require_same_grid(f.size(), g.size(), "sup_distance");
  double m = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j] - g[j]));
  return m;
}

double pointwise_identity_check(std::span<const double> phi, std::span<const double> dphi,
                                std::span<const double> psi, std::span<const double> dpsi) {
  require_same_grid(phi.size(), dphi.size(), "pointwise_identity_check");
  require_same_grid(phi.size(), psi.size(), "pointwise_identity_check");
  require_same_grid(phi.size(), dpsi.size(), "pointwise_identity_check");
  double worst = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const cplx df = cplx(0.0, dphi[j]) * std::polar(1.0, phi[j]);
    const cplx dg = cplx(0.0, dpsi[j]) * std::polar(1.0, psi[j]);
    const double lhs = std::norm(df - dg);
    const double half = 0.5 * (phi[j] - psi[j]);
    const double c = std::cos(half), s = std::sin(half);
    const double rhs = c * c * (dphi[j] - dpsi[j]) * (dphi[j] - dpsi[j]) +
                       s * s * (dphi[j] + dpsi[j]) * (dphi[j] + dpsi[j]);
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

double pointwise_identity_check(const AnalyticCircleMap& f, const AnalyticCircleMap& g,
                                std::size_t M) {
  const Phase phi = f.sample_phase(M);
  const Phase psi = g.sample_phase(M);
  return pointwise_identity_check(phi.values, f.sample_phase_derivative(M), psi.values,
                                  g.sample_phase_derivative(M));
}

}  // namespace hg
