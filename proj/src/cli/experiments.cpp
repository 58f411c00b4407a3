#include "hg/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hg/cli/map_spec.hpp"
#include "hg/optimizer.hpp"
#include "hg/profiles.hpp"
#include "hg/seminorms.hpp"
#include "hg/sphere2.hpp"

namespace hg::cli {

bool ExperimentResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::string& ExperimentParams::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

double ExperimentParams::number(const std::string& key) const { return parse_number(raw(key)); }

int ExperimentParams::integer(const std::string& key) const {
  const double v = number(key);
  if (v != std::round(v)) throw UsageError("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

std::vector<double> ExperimentParams::list(const std::string& key) const { return parse_list(raw(key)); }

std::vector<int> ExperimentParams::int_list(const std::string& key) const {
  std::vector<int> out;
  for (double v : list(key)) {
    if (v != std::round(v)) throw UsageError("parameter '" + key + "' must hold integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

double pair_distance(const GalleryPair& pair, double s, double p, std::size_t M) {
  if (s == 1.0) return w1p_distance(pair.f, pair.g, p);
  const auto diff = difference(pair.f.sample(M), pair.g.sample(M));
  if (s == 0.5 && p == 2.0) return std::sqrt(h_half_seminorm_sq(diff));
  return gagliardo_seminorm(std::span<const cplx>(diff), s, p);
}

namespace {

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Check rel_check(const std::string& name, double value, double expected, double tol) {
  const double rel = std::fabs(value - expected) / std::fabs(expected);
  return {name, rel <= tol, fmt("rel error %.3e", rel) + fmt(" (tolerance %.0e)", tol)};
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt("%.6g", v[i]);
  return s;
}

// Critical W^{1/p,p} semi-norm on S^1 of a function of theta, graded towards 0.
double critical_norm_s1(const std::function<cplx(double)>& h, double eps, double p) {
  return gagliardo_seminorm_graded(h, graded_mesh(0.0, eps / 20.0), 1.0 / p, p, KernelDistance::chord);
}

// Degree read off a uniform grid fine enough to resolve the bump (2 pi / M <= eps / 8).
int fine_degree(const AnalyticCircleMap& m, double eps) {
  std::size_t M = 1024;
  while (kTwoPi / static_cast<double>(M) > eps / 8.0) M *= 2;
  return degree_winding(lift(m.sample(M)));
}

// ---- experiments --------------------------------------------------------------------

ExperimentResult w11_zigzag(const ExperimentParams& P) {
  const auto d1 = P.int_list("d1"), d2 = P.int_list("d2");
  if (d1.size() != d2.size()) throw UsageError("d1 and d2 lists must have the same length");
  ExperimentResult r;
  r.table.header = {"d1", "d2", "value", "expected", "rel_error"};
  for (std::size_t i = 0; i < d1.size(); ++i) {
    const auto z = zigzag_pair(d1[i], d2[i]);
    const double v = w1p_distance(z.f, z.g, 1.0);
    const double e = 4.0 * std::abs(d1[i] - d2[i]);
    r.table.rows.push_back({d1[i], d2[i], v, e, std::fabs(v - e) / e});
    r.checks.push_back(rel_check(fmt("W11(zigzag %g,", d1[i]) + fmt("%g) = 4|d1-d2|", d2[i]), v, e, 1e-3));
  }
  return r;
}

ExperimentResult w1p_formula(const ExperimentParams& P) {
  const int d1 = P.integer("d1"), d2 = P.integer("d2");
  OptimizeBudget b;
  b.modes = P.integer("modes");
  b.restarts = P.integer("restarts");
  b.iterations = P.integer("iterations");
  b.grid = static_cast<std::size_t>(P.integer("grid"));
  b.seed = static_cast<std::uint64_t>(P.integer("seed"));
  const double tol = P.number("tolerance");
  ExperimentResult r;
  r.table.header = {"p", "optimizer_value", "witness_value", "target", "rel_gap", "max_phase_derivative"};
  for (double p : P.list("p")) {
    const auto rep = estimate_inf_distance(analytic_power(d1), d2, SobolevIndex(1.0, p), b);
    const double gap = (rep.optimizer_value - rep.target) / rep.target;
    r.table.rows.push_back({p, rep.optimizer_value, rep.witness_value, rep.target, gap, rep.max_phase_derivative});
    r.checks.push_back(rel_check(fmt("optimizer p=%g within tolerance of 2^{1/p+1} pi^{1/p-1}|d1-d2|", p),
                                 rep.optimizer_value, rep.target, tol));
  }
  return r;
}

ExperimentResult dist_w11_hausdorff(const ExperimentParams& P) {
  const int d1 = P.integer("d1");
  ExperimentResult r;
  r.table.header = {"construction", "d", "lambda", "value", "expected", "rel_error"};
  for (int d : P.int_list("d")) {
    for (double lambda : P.list("lambda")) {
      const auto pr = deflation_pair(d1, d, lambda);
      const double v = w1p_distance(pr.f, pr.g, 1.0);
      const double e = kTwoPi * std::abs(d);
      r.table.rows.push_back({"deflation", d, lambda, v, e, std::fabs(v - e) / e});
      r.checks.push_back(rel_check(fmt("deflation d=%g lambda=%g: W11 = 2 pi |d|", d, lambda), v, e, 1e-3));
    }
    // For comparison: the closest pair between the same classes.
    const auto z = zigzag_pair(d1, d1 - d);
    const double v = w1p_distance(z.f, z.g, 1.0);
    r.table.rows.push_back({"zigzag", d, std::nan(""), v, 4.0 * std::abs(d), std::fabs(v - 4.0 * std::abs(d)) / (4.0 * std::abs(d))});
  }
  return r;
}

ExperimentResult h_half_blaschke(const ExperimentParams& P) {
  const int d = P.integer("d");
  const auto M = static_cast<std::size_t>(P.integer("grid"));
  const double target = 4.0 * kPi * kPi * std::abs(d);
  const auto f = power_map(d, M);
  ExperimentResult r;
  r.table.header = {"delta", "h_half_sq_h", "h_half_sq_fh_minus_f", "target", "excess", "rel_excess"};
  std::vector<double> excess;
  bool all_positive = true;
  double worst_h = 0.0;
  for (double delta : P.list("delta")) {
    const auto h = blaschke_pow(d, delta).sample(M);
    const double hh = h_half_seminorm_sq(h);
    const double v = h_half_seminorm_sq(difference(product(f, h), f));
    excess.push_back(v - target);
    all_positive = all_positive && v - target > 0.0;
    worst_h = std::max(worst_h, std::fabs(hh - target) / target);
    r.table.rows.push_back({delta, hh, v, target, v - target, (v - target) / target});
  }
  r.checks.push_back({"|h_delta|^2 = 4 pi^2 |d|", worst_h < 1e-6, fmt("worst rel error %.3e", worst_h)});
  r.checks.push_back({"excess positive", all_positive, "excess: " + join(excess)});
  std::vector<double> magnitude;
  for (double e : excess) magnitude.push_back(std::fabs(e));
  r.checks.push_back({"|excess| decreasing", strictly_decreasing(magnitude), "excess: " + join(excess)});
  const double final_rel = std::fabs(excess.back()) / target;
  r.checks.push_back({"final |excess| < 5% of 4 pi^2 |d|", final_rel < 0.05, fmt("%.3e", final_rel)});
  return r;
}

ExperimentResult eps_bump_critical(const ExperimentParams& P) {
  const double p = P.number("p");
  const auto eps_list = P.list("eps");
  ExperimentResult r;
  r.table.header = {"N", "eps", "deg_f", "deg_g", "critical_norm"};
  std::vector<double> n1, n2;
  bool deg1 = true, deg2 = true;
  for (double eps : eps_list) {
    const auto pr = bump_pair_s1(eps);
    const int df = fine_degree(pr.f, eps), dg = fine_degree(pr.g, eps);
    deg1 = deg1 && df == 1 && dg == 0;
    const double v = critical_norm_s1([&](double t) { return pr.f.value_at(t) - pr.g.value_at(t); }, eps, p);
    n1.push_back(v);
    r.table.rows.push_back({1, eps, df, dg, v});
  }
  r.checks.push_back({"N=1 degrees (1,0)", deg1, ""});
  r.checks.push_back({"N=1 critical norm strictly decreasing", strictly_decreasing(n1), join(n1)});
  if (p == 2.0) {
    // On S^2 the critical index for p = 2 is H^1.
    const auto n_lambda = static_cast<std::size_t>(P.integer("n_lambda"));
    for (double eps : eps_list) {
      const auto grid = bump_grid(eps, n_lambda);
      const auto pr = bump_pair_s2(eps, grid);
      const double df = degree_kronecker_s2(pr.f).value, dg = degree_kronecker_s2(pr.g).value;
      deg2 = deg2 && std::fabs(df - 1.0) < 1e-2 && std::fabs(dg) < 1e-2;
      const double v = h1_distance(pr.f, pr.g);
      n2.push_back(v);
      r.table.rows.push_back({2, eps, df, dg, v});
    }
    r.checks.push_back({"N=2 degrees within 1e-2 of (1,0)", deg2, ""});
    r.checks.push_back({"N=2 critical norm strictly decreasing", strictly_decreasing(n2), join(n2)});
  }
  return r;
}

ExperimentResult capacity_decay(const ExperimentParams& P) {
  const double s = P.number("s"), p = P.number("p"), R = P.number("R");
  ExperimentResult r;
  r.table.header = {"eps", "seminorm"};
  std::vector<double> v;
  for (double eps : P.list("eps")) {
    const CapacityProfiles prof(eps, R);
    const double n = gagliardo_seminorm_graded(
        [&](double t) { return cplx(prof.H(std::fabs(std::remainder(t, kTwoPi))), 0.0); },
        graded_mesh(0.0, eps / 20.0), s, p);
    v.push_back(n);
    r.table.rows.push_back({eps, n});
  }
  r.checks.push_back({"strictly decreasing", strictly_decreasing(v), join(v)});
  r.checks.push_back({"final < 0.5 x initial", v.back() < 0.5 * v.front(), fmt("ratio %.4f", v.back() / v.front())});
  return r;
}

ExperimentResult s2_energy(const ExperimentParams& P) {
  const auto grid = Sphere2Grid::uniform(static_cast<std::size_t>(P.integer("n_phi")),
                                         static_cast<std::size_t>(P.integer("n_lambda")));
  ExperimentResult r;
  r.table.header = {"d", "degree", "energy", "expected_energy", "rel_error", "pole_warning"};
  for (int d : P.int_list("d")) {
    const auto f = stereographic_power(d, grid);
    const auto deg = degree_kronecker_s2(f);
    const auto en = dirichlet_energy(f);
    const double e = 8.0 * kPi * std::abs(d);
    r.table.rows.push_back({d, deg.value, en.value, e, std::fabs(en.value - e) / e, deg.pole_warning || en.pole_warning});
    r.checks.push_back({fmt("degree of stereographic power d=%g", d), std::fabs(deg.value - d) < 1e-3,
                        fmt("%.8f", deg.value)});
    r.checks.push_back(rel_check(fmt("energy = 8 pi |d| for d=%g", d), en.value, e, 1e-2));
  }
  return r;
}

ExperimentResult s2_vo1(const ExperimentParams& P) {
  const auto grid = vo1_grid(static_cast<std::size_t>(P.integer("n_lambda")));
  const int d2 = P.integer("d2");
  ExperimentResult r;
  r.table.header = {"d1", "d2", "deg_f", "deg_g", "h1_distance", "max_field_change"};
  std::vector<Vec3> first;
  std::vector<double> h1;
  double worst_field = 0.0;
  bool degrees = true;
  for (int d1 : P.int_list("d1")) {
    const auto pr = vo1_pair(d1, d2, grid);
    const auto diff = difference(pr.f, pr.g);
    double change = 0.0;
    if (first.empty()) {
      first = diff;
    } else {
      for (std::size_t k = 0; k < diff.size(); ++k) {
        for (int c = 0; c < 3; ++c) change = std::max(change, std::fabs(diff[k][c] - first[k][c]));
      }
    }
    worst_field = std::max(worst_field, change);
    const double df = degree_kronecker_s2(pr.f).value, dg = degree_kronecker_s2(pr.g).value;
    degrees = degrees && std::fabs(df - d1) < 1e-2 * std::max(1, std::abs(d1)) && std::fabs(dg - d2) < 1e-2;
    h1.push_back(h1_distance(pr.f, pr.g));
    r.table.rows.push_back({d1, d2, df, dg, h1.back(), change});
  }
  const double spread = (*std::max_element(h1.begin(), h1.end()) - *std::min_element(h1.begin(), h1.end())) / h1.front();
  r.checks.push_back({"f-g fields agree to 1e-12", worst_field < 1e-12, fmt("%.3e", worst_field)});
  r.checks.push_back({"h1 distance independent of d1 to 1e-6", spread < 1e-6, fmt("%.3e", spread)});
  r.checks.push_back({"degrees match (d1, d2) within 1e-2 relative", degrees, ""});
  return r;
}

ExperimentResult attainment(const ExperimentParams& P) {
  ExperimentResult r;
  r.table.header = {"p", "construction", "value", "bound", "rel_gap", "diagnostic"};
  // p = 1: the zigzag pair attains the bound.
  {
    const auto z = zigzag_pair(1, -1);
    const double v = w1p_distance(z.f, z.g, 1.0), b = w1p_class_distance(1, -1, 1.0);
    r.table.rows.push_back({1.0, "zigzag", v, b, (v - b) / b, std::nan("")});
    r.checks.push_back(rel_check("p=1 zigzag attains the bound", v, b, 1e-3));
  }
  // 1 < p < 2, d2 = -d1: the explicit pair attains it, with f - g purely imaginary.
  {
    const double p = P.number("p_mid");
    const auto pr = attainment_pair(1, p);
    const double v = w1p_distance(pr.f, pr.g, p), b = w1p_class_distance(1, -1, p);
    double residual = 0.0;
    const std::size_t M = 1 << 14;
    for (std::size_t j = 0; j < M; ++j) {
      residual = std::max(residual, std::fabs(std::real(pr.f.value_at(grid_theta(j, M)) - pr.g.value_at(grid_theta(j, M)))));
    }
    r.table.rows.push_back({p, "attainment", v, b, (v - b) / b, residual});
    r.checks.push_back(rel_check(fmt("p=%g attainment pair matches the bound", p), v, b, 1e-2));
    r.checks.push_back({"Re(f-g) residual < 1e-9", residual < 1e-9, fmt("%.3e", residual)});
  }
  // p >= 2: nothing attains; the optimizer gets close while concentrating.
  {
    const double p = P.number("p_high");
    OptimizeBudget b;
    b.modes = P.integer("modes");
    b.restarts = P.integer("restarts");
    b.iterations = P.integer("iterations");
    b.grid = static_cast<std::size_t>(P.integer("grid"));
    b.seed = static_cast<std::uint64_t>(P.integer("seed"));
    const int factor = P.integer("factor");
    const auto probe = attainment_probe(P.integer("probe_d1"), P.integer("probe_d2"), p, {b, b.scaled(factor)});
    for (const auto& level : probe.levels) {
      const double v = level.report.optimizer_value;
      r.table.rows.push_back({p, "optimizer K=" + std::to_string(level.budget.modes), v, probe.bound,
                              (v - probe.bound) / probe.bound, level.report.max_phase_derivative});
    }
    const auto& lo = probe.levels.front().report;
    const auto& hi = probe.levels.back().report;
    const double gap = (hi.optimizer_value - probe.bound) / probe.bound;
    const double growth = hi.max_phase_derivative / lo.max_phase_derivative;
    r.checks.push_back({fmt("p=%g probe gap < 5%%", p), gap < 0.05, fmt("%.4f", gap)});
    r.checks.push_back({"max |psi'| grows >= 2x with the budget", growth >= 2.0, fmt("%.3f", growth)});
  }
  return r;
}

ExperimentResult oscillator_lb(const ExperimentParams& P) {
  OptimizeBudget b;
  b.modes = P.integer("modes");
  b.restarts = P.integer("restarts");
  b.iterations = P.integer("iterations");
  b.grid = static_cast<std::size_t>(P.integer("grid"));
  b.seed = static_cast<std::uint64_t>(P.integer("seed"));
  const int d1 = P.integer("d1");
  ExperimentResult r;
  r.table.header = {"n", "value", "two_pi", "max_phase_derivative"};
  std::vector<double> v;
  for (int n : P.int_list("n")) {
    const auto rep = estimate_point_to_class(oscillator(d1, n), 0, SobolevIndex(1.0, 1.0), b);
    v.push_back(rep.optimizer_value);
    r.table.rows.push_back({n, rep.optimizer_value, kTwoPi, rep.max_phase_derivative});
  }
  bool nondecreasing = true;
  for (std::size_t i = 1; i < v.size(); ++i) nondecreasing = nondecreasing && v[i] >= v[i - 1];
  r.checks.push_back({"values nondecreasing in n", nondecreasing, join(v)});
  r.checks.push_back({"final value >= 2 pi - 0.3", v.back() >= kTwoPi - 0.3, fmt("%.6f", v.back())});
  return r;
}

// max/min of the slopes between consecutive points.
double slope_ratio(const std::vector<double>& x, const std::vector<double>& y) {
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double s = (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi / lo;
}

ExperimentResult multibump_scaling(const ExperimentParams& P) {
  const int n = P.integer("n");
  const auto M = static_cast<std::size_t>(P.integer("grid"));
  ExperimentResult r;
  r.table.header = {"d", "h_half_sq", "per_degree"};
  std::vector<double> x, y;
  for (int d : P.int_list("d")) {
    const double v = h_half_seminorm_sq(multi_bump_s1(d, n).sample(M));
    x.push_back(d);
    y.push_back(v);
    r.table.rows.push_back({d, v, v / d});
  }
  const double ratio = slope_ratio(x, y);
  r.checks.push_back({"slope ratio max/min < 1.25", ratio < 1.25, fmt("%.4f", ratio)});
  return r;
}

ExperimentResult product_shift_scaling(const ExperimentParams& P) {
  const double s = P.number("s"), p = P.number("p");
  const auto M = static_cast<std::size_t>(P.integer("grid"));
  const int d2 = P.integer("d2");
  ExperimentResult r;
  r.table.header = {"d", "value", "value_over_d_pow_s"};
  std::vector<double> q;
  for (int d : P.int_list("d")) {
    const double v = pair_distance(product_shift(d2 + d, d2), s, p, M);
    q.push_back(v / std::pow(std::abs(d), s));
    r.table.rows.push_back({d, v, q.back()});
  }
  const double ratio = *std::max_element(q.begin(), q.end()) / *std::min_element(q.begin(), q.end());
  r.checks.push_back({"value / |d|^s stays within a factor 1.5", ratio < 1.5, fmt("%.4f", ratio)});
  return r;
}

ExperimentResult degree_stability(const ExperimentParams& P) {
  const double p = P.number("p");
  const int N = 1;
  ExperimentResult r;
  r.table.header = {"eps", "deg_f", "deg_g", "norm_f_minus_g", "norm_f", "norm_g", "degree_gap_ratio"};
  std::vector<double> diffs;
  bool degrees = true, finite = true;
  for (double eps : P.list("eps")) {
    const auto pr = bump_pair_s1(eps);
    const int df = fine_degree(pr.f, eps), dg = fine_degree(pr.g, eps);
    degrees = degrees && df == 1 && dg == 0;
    const double nd = critical_norm_s1([&](double t) { return pr.f.value_at(t) - pr.g.value_at(t); }, eps, p);
    const double nf = critical_norm_s1([&](double t) { return pr.f.value_at(t); }, eps, p);
    const double ng = critical_norm_s1([&](double t) { return pr.g.value_at(t); }, eps, p);
    const double e1 = p / (N + 1.0), e2 = N * p / (N + 1.0);
    const double ratio = std::abs(df - dg) / (std::pow(nd, e1) * (std::pow(nf, e2) + std::pow(ng, e2)));
    finite = finite && std::isfinite(ratio);
    diffs.push_back(nd);
    r.table.rows.push_back({eps, df, dg, nd, nf, ng, ratio});
  }
  r.checks.push_back({"degrees stay (1,0)", degrees, ""});
  r.checks.push_back({"critical norm of f-g strictly decreasing", strictly_decreasing(diffs), join(diffs)});
  r.checks.push_back({"degree gap ratio finite", finite, ""});
  return r;
}

std::vector<ExperimentInfo> build_registry() {
  return {
      {"w11-zigzag", "W11 distance of the zigzag pair equals 4|d1-d2| (rel 1e-3)",
       {{"d1", "1,3,2"}, {"d2", "0,1,-1"}}, w11_zigzag},
      {"w1p-formula",
       "optimizer inf over E_d1 x E_d2 in W^{1,p} within 3% of 2^{1/p+1} pi^{1/p-1}|d1-d2|",
       {{"p", "1,2"}, {"d1", "0"}, {"d2", "1"}, {"modes", "32"}, {"restarts", "4"}, {"iterations", "2000"},
        {"grid", "1024"}, {"seed", "0"}, {"tolerance", "0.03"}},
       w1p_formula},
      {"dist-w11-hausdorff", "deflated pair has W11 distance 2 pi |d| (rel 1e-3); zigzag rows for comparison",
       {{"d1", "1"}, {"d", "1,2,3"}, {"lambda", "0.1,0.01"}}, dist_w11_hausdorff},
      {"h-half-blaschke",
       "|f h_delta - f|^2_{H^1/2} - 4 pi^2 |d| positive, decreasing, final below 5% (f = z^d)",
       {{"d", "2"}, {"delta", "1e-1,1e-2,1e-3"}, {"grid", "262144"}}, h_half_blaschke},
      {"eps-bump-critical", "bump pair degrees (1,0) and critical norm of f-g strictly decreasing in eps",
       {{"p", "2"}, {"eps", "1e-2,1e-3,1e-4"}, {"n_lambda", "256"}}, eps_bump_critical},
      {"capacity-decay", "Gagliardo semi-norm of H_eps strictly decreasing, final < 0.5 x initial",
       {{"eps", "1e-2,1e-4,1e-6"}, {"s", "0.5"}, {"p", "2"}, {"R", "0.5"}}, capacity_decay},
      {"s2-energy", "stereographic power: degree within 1e-3 of d, energy within 1% of 8 pi |d|",
       {{"d", "1,2"}, {"n_phi", "128"}, {"n_lambda", "256"}}, s2_energy},
      {"s2-vo1", "vo1 pair: f-g identical across d1 (1e-12), H^1 distance independent of d1 (1e-6)",
       {{"d1", "3,7"}, {"d2", "0"}, {"n_lambda", "256"}}, s2_vo1},
      {"attainment",
       "p=1 zigzag attains; 1<p<2 explicit pair attains (1%), Re(f-g)=0; p>=2 probe gap < 5% with max|psi'| "
       "growing >= 2x",
       {{"p_mid", "1.5"}, {"p_high", "2"}, {"probe_d1", "0"}, {"probe_d2", "1"}, {"modes", "8"},
        {"restarts", "2"}, {"iterations", "500"}, {"grid", "1024"}, {"factor", "4"}, {"seed", "0"}},
       attainment},
      {"oscillator-lb", "W11 distance from oscillator(d1, n) to E_0 nondecreasing in n, final >= 2 pi - 0.3",
       {{"n", "6,10,16"}, {"d1", "1"}, {"modes", "32"}, {"restarts", "4"}, {"iterations", "1000"},
        {"grid", "4096"}, {"seed", "0"}},
       oscillator_lb},
      {"multibump-scaling", "|h|^2_{H^1/2} of d unit bumps is linear in d (slope ratio < 1.25)",
       {{"d", "1,2,4,8"}, {"n", "16"}, {"grid", "65536"}}, multibump_scaling},
      {"product-shift-scaling", "|f-g|_{W^{s,p}} for f = h^d g grows like |d|^s (ratio within 1.5)",
       {{"d", "1,2,4,8"}, {"d2", "0"}, {"s", "1"}, {"p", "1"}, {"grid", "4096"}}, product_shift_scaling},
      {"degree-stability", "bump pair degrees stay (1,0) while the critical norm of f-g shrinks; ratio logged",
       {{"eps", "1e-2,1e-3,1e-4"}, {"p", "2"}}, degree_stability},
  };
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> registry = build_registry();
  return registry;
}

const ExperimentInfo* find_experiment(const std::string& name) {
  for (const auto& e : experiment_registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

ExperimentResult run_experiment(const std::string& name, const std::map<std::string, std::string>& overrides) {
  const ExperimentInfo* info = find_experiment(name);
  if (!info) throw UsageError("unknown experiment '" + name + "'");
  auto values = info->defaults;
  for (const auto& [k, v] : overrides) {
    if (!values.count(k)) throw UsageError(name + ": unknown parameter '" + k + "'");
    values[k] = v;
  }
  // Validate every value before any computation.
  for (const auto& [k, v] : values) parse_list(v);
  return info->run(ExperimentParams(values));
}

}  // namespace hg::cli
