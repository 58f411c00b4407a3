#include "hg/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "detail/summation.hpp"
#include "hg/errors.hpp"
#include "hg/fft.hpp"
#include "hg/gallery.hpp"
#include "hg/profiles.hpp"
#include "hg/seminorms.hpp"

namespace hg {

// ---- PhaseAnsatz ------------------------------------------------------------------

namespace {

// Periodic part sum_k (a_k cos k t + b_k sin k t) + c0 and its derivative via
// one inverse FFT of (coefficients of P) + i (coefficients of P').
void synthesize(double c0, std::span<const double> a, std::span<const double> b, std::size_t M,
                std::vector<double>& P, std::vector<double>& dP) {
  std::vector<cplx> C(M, 0.0);
  C[0] = c0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    const cplx ck = 0.5 * cplx(a[k - 1], -b[k - 1]);  // coefficient of e^{ik t}
    const cplx cm = std::conj(ck);                    // coefficient of e^{-ik t}
    const double kk = static_cast<double>(k);
    C[k] += ck + cplx(0.0, 1.0) * (cplx(0.0, kk) * ck);
    C[M - k] += cm + cplx(0.0, 1.0) * (cplx(0.0, -kk) * cm);
  }
  const auto z = fft::backward(C);
  P.resize(M);
  dP.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    P[j] = z[j].real();
    dP[j] = z[j].imag();
  }
}

}  // namespace

void PhaseAnsatz::evaluate(std::size_t M, std::vector<double>& psi, std::vector<double>& dpsi) const {
  validate_grid_size(M);
  if (2 * modes() >= M) throw IndexOutOfRange("PhaseAnsatz: too many modes for the grid");
  synthesize(c0, a, b, M, psi, dpsi);
  for (std::size_t j = 0; j < M; ++j) {
    psi[j] += winding * grid_theta(j, M);
    dpsi[j] += winding;
  }
}

CircleMap PhaseAnsatz::exponentiate(std::size_t M) const {
  std::vector<double> psi, dpsi;
  evaluate(M, psi, dpsi);
  return CircleMap::from_phase(psi);
}

PhaseAnsatz PhaseAnsatz::project(std::span<const double> values, int winding, std::size_t K) {
  const std::size_t M = values.size();
  validate_grid_size(M);
  if (2 * K >= M) throw IndexOutOfRange("PhaseAnsatz::project: too many modes for the grid");
  std::vector<cplx> periodic(M);
  for (std::size_t j = 0; j < M; ++j) periodic[j] = values[j] - winding * grid_theta(j, M);
  const FourierSeries F = fourier(periodic);
  PhaseAnsatz out;
  out.winding = winding;
  out.c0 = F.coefficient(0).real();
  for (std::size_t k = 1; k <= K; ++k) {
    const cplx ck = F.coefficient(static_cast<long>(k));
    out.a.push_back(2.0 * ck.real());
    out.b.push_back(-2.0 * ck.imag());
  }
  return out;
}

double w1p_class_distance(int d1, int d2, double p) {
  return std::pow(2.0, 1.0 / p + 1.0) * std::pow(kPi, 1.0 / p - 1.0) * std::abs(d1 - d2);
}

// ---- search machinery ----------------------------------------------------------------

namespace {

enum class Kind { w1p, h_half };

using Fn = std::function<double(const std::vector<double>&)>;

struct SearchResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead with dimension-adaptive coefficients.
SearchResult nelder_mead(const Fn& fun, std::vector<double> x0, double step, int max_iter,
                         double tol) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double alpha = 1.0, beta = 1.0 + 2.0 / dn, gamma = 0.75 - 0.5 / dn, delta = 1.0 - 1.0 / dn;
  std::vector<std::vector<double>> s(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) s[i + 1][i] += step;
  for (std::size_t i = 0; i <= n; ++i) fv[i] = fun(s[i]);
  std::vector<std::size_t> order(n + 1);
  SearchResult res;
  int it = 0;
  for (; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) { return fv[l] < fv[r]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (std::fabs(fv[worst] - fv[best]) <= tol * (std::fabs(fv[best]) + tol)) {
      res.converged = true;
      break;
    }
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) c[k] += s[i][k] / dn;
    }
    auto along = [&](double t) {
      std::vector<double> y(n);
      for (std::size_t k = 0; k < n; ++k) y[k] = c[k] + t * (s[worst][k] - c[k]);
      return y;
    };
    auto xr = along(-alpha);
    const double fr = fun(xr);
    if (fr < fv[best]) {
      auto xe = along(-alpha * beta);
      const double fe = fun(xe);
      if (fe < fr) {
        s[worst] = xe, fv[worst] = fe;
      } else {
        s[worst] = xr, fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      s[worst] = xr, fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    auto xc = along(outside ? -alpha * gamma : gamma);
    const double fc = fun(xc);
    if (fc < std::min(fr, fv[worst])) {
      s[worst] = xc, fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) s[i][k] = s[best][k] + delta * (s[i][k] - s[best][k]);
      fv[i] = fun(s[i]);
    }
  }
  const auto b = std::min_element(fv.begin(), fv.end()) - fv.begin();
  res.x = s[static_cast<std::size_t>(b)];
  res.value = fv[static_cast<std::size_t>(b)];
  res.iterations = it;
  return res;
}

std::vector<double> fd_gradient(const Fn& fun, std::vector<double> x) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double h = 1e-6 * std::max(1.0, std::fabs(xi));
    x[i] = xi + h;
    const double fp = fun(x);
    x[i] = xi - h;
    const double fm = fun(x);
    x[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

double dotv(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Limited-memory BFGS on central-difference gradients with Armijo backtracking.
SearchResult lbfgs(const Fn& fun, std::vector<double> x, int max_iter) {
  constexpr std::size_t kMemory = 8;
  const std::size_t n = x.size();
  SearchResult res;
  double fx = fun(x);
  auto g = fd_gradient(fun, x);
  std::vector<std::vector<double>> S, Y;
  int it = 0;
  for (; it < max_iter; ++it) {
    if (std::sqrt(dotv(g, g)) < 1e-9) {
      res.converged = true;
      break;
    }
    // Two-loop recursion.
    std::vector<double> q = g;
    std::vector<double> alpha(S.size());
    for (std::size_t i = S.size(); i-- > 0;) {
      alpha[i] = dotv(S[i], q) / dotv(Y[i], S[i]);
      for (std::size_t k = 0; k < n; ++k) q[k] -= alpha[i] * Y[i][k];
    }
    if (!S.empty()) {
      const double scale = dotv(S.back(), Y.back()) / dotv(Y.back(), Y.back());
      for (double& v : q) v *= scale;
    } else {
      const double gn = std::sqrt(dotv(g, g));
      for (double& v : q) v *= 0.1 / gn;
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
      const double beta = dotv(Y[i], q) / dotv(Y[i], S[i]);
      for (std::size_t k = 0; k < n; ++k) q[k] += S[i][k] * (alpha[i] - beta);
    }
    std::vector<double> dir(n);
    for (std::size_t k = 0; k < n; ++k) dir[k] = -q[k];
    double slope = dotv(dir, g);
    if (slope >= 0.0) {
      // Not a descent direction: fall back to steepest descent and drop history.
      S.clear();
      Y.clear();
      const double gn = std::sqrt(dotv(g, g));
      for (std::size_t k = 0; k < n; ++k) dir[k] = -0.1 * g[k] / gn;
      slope = dotv(dir, g);
    }
    double t = 1.0;
    std::vector<double> xn(n);
    double fn = fx;
    bool accepted = false;
    for (int ls = 0; ls < 30; ++ls) {
      for (std::size_t k = 0; k < n; ++k) xn[k] = x[k] + t * dir[k];
      fn = fun(xn);
      if (fn <= fx + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      res.converged = true;  // no further decrease available at FD resolution
      break;
    }
    auto gn = fd_gradient(fun, xn);
    std::vector<double> s(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      s[k] = xn[k] - x[k];
      y[k] = gn[k] - g[k];
    }
    if (dotv(s, y) > 1e-12 * std::sqrt(dotv(s, s) * dotv(y, y))) {
      S.push_back(s);
      Y.push_back(y);
      if (S.size() > kMemory) {
        S.erase(S.begin());
        Y.erase(Y.begin());
      }
    }
    const double rel = (fx - fn) / std::max(1e-300, std::fabs(fx));
    x = std::move(xn);
    g = std::move(gn);
    fx = fn;
    if (rel < 1e-12) {
      res.converged = true;
      break;
    }
  }
  res.x = std::move(x);
  res.value = fx;
  res.iterations = it;
  return res;
}

// Standard normal from a 64-bit engine via Box-Muller (engine output is fully
// specified, so draws are identical across platforms).
double normal_draw(std::mt19937_64& rng) {
  constexpr double kScale = 1.0 / 18446744073709551616.0;  // 2^-64
  const double u1 = (static_cast<double>(rng()) + 0.5) * kScale;
  const double u2 = (static_cast<double>(rng()) + 0.5) * kScale;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double uniform_draw(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;  // 2^53
}

// Objective on relative phases: f~ = f0 e^{i alpha}, g = f0 e^{i eta}.
// Parameter layout: [c0, A_1..A_K, B_1..B_K, (free f) AA_1..AA_K, BB_1..BB_K]
// with a_k = A_k / k so that all coordinates move derivatives at a similar rate.
class Problem {
 public:
  Problem(std::vector<cplx> F, std::vector<double> dphi, int eta_winding, bool free_f, Kind kind,
          double p, int K)
      : F_(std::move(F)), dphi_(std::move(dphi)), eta_winding_(eta_winding), free_f_(free_f),
        kind_(kind), p_(p), K_(K) {}

  std::size_t dim() const { return 1 + 2 * K_ + (free_f_ ? 2 * K_ : 0); }
  std::size_t M() const { return F_.size(); }
  int K() const { return K_; }
  bool free_f() const { return free_f_; }

  // Indices of the coordinates that carry modes <= k_active.
  std::vector<std::size_t> active(int k_active) const {
    std::vector<std::size_t> idx{0};
    const std::size_t blocks = free_f_ ? 4 : 2;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      for (int k = 1; k <= k_active; ++k) idx.push_back(1 + blk * K_ + static_cast<std::size_t>(k - 1));
    }
    return idx;
  }

  PhaseAnsatz eta(const std::vector<double>& x) const { return block_ansatz(x, 0, eta_winding_, x[0]); }
  PhaseAnsatz alpha(const std::vector<double>& x) const {
    if (!free_f_) {
      PhaseAnsatz z;
      z.a.assign(static_cast<std::size_t>(K_), 0.0);
      z.b.assign(static_cast<std::size_t>(K_), 0.0);
      return z;
    }
    return block_ansatz(x, 2, 0, 0.0);
  }

  std::vector<double> to_parameters(const PhaseAnsatz& eta, const PhaseAnsatz* alpha) const {
    std::vector<double> x(dim(), 0.0);
    x[0] = eta.c0;
    for (int k = 1; k <= K_ && static_cast<std::size_t>(k) <= eta.modes(); ++k) {
      x[static_cast<std::size_t>(k)] = k * eta.a[static_cast<std::size_t>(k - 1)];
      x[static_cast<std::size_t>(K_ + k)] = k * eta.b[static_cast<std::size_t>(k - 1)];
    }
    if (free_f_ && alpha) {
      for (int k = 1; k <= K_ && static_cast<std::size_t>(k) <= alpha->modes(); ++k) {
        x[static_cast<std::size_t>(2 * K_ + k)] = k * alpha->a[static_cast<std::size_t>(k - 1)];
        x[static_cast<std::size_t>(3 * K_ + k)] = k * alpha->b[static_cast<std::size_t>(k - 1)];
      }
    }
    return x;
  }

  struct Fields {
    std::vector<cplx> f, g;
    std::vector<double> df_phase, dg_phase;
  };

  Fields fields(const std::vector<double>& x) const {
    const std::size_t M = this->M();
    std::vector<double> e, de, a, da;
    eta(x).evaluate(M, e, de);
    Fields out;
    out.f.resize(M);
    out.g.resize(M);
    out.df_phase.resize(M);
    out.dg_phase.resize(M);
    if (free_f_) {
      alpha(x).evaluate(M, a, da);
    } else {
      a.assign(M, 0.0);
      da.assign(M, 0.0);
    }
    for (std::size_t j = 0; j < M; ++j) {
      out.f[j] = F_[j] * std::polar(1.0, a[j]);
      out.g[j] = F_[j] * std::polar(1.0, e[j]);
      out.df_phase[j] = dphi_[j] + da[j];
      out.dg_phase[j] = dphi_[j] + de[j];
    }
    return out;
  }

  double operator()(const std::vector<double>& x) const {
    const std::size_t M = this->M();
    std::vector<double> e, de, a, da;
    eta(x).evaluate(M, e, de);
    if (free_f_) alpha(x).evaluate(M, a, da);
    if (kind_ == Kind::w1p) {
      detail::NeumaierSum sum;
      for (std::size_t j = 0; j < M; ++j) {
        const double al = free_f_ ? a[j] : 0.0, dal = free_f_ ? da[j] : 0.0;
        const cplx v = (dphi_[j] + dal) * std::polar(1.0, al) - (dphi_[j] + de[j]) * std::polar(1.0, e[j]);
        const double r2 = std::norm(v);
        sum.add(p_ == 1.0 ? std::sqrt(r2) : (p_ == 2.0 ? r2 : std::pow(r2, 0.5 * p_)));
      }
      return std::pow(sum.value() * kTwoPi / static_cast<double>(M), 1.0 / p_);
    }
    std::vector<cplx> diff(M);
    for (std::size_t j = 0; j < M; ++j) {
      const double al = free_f_ ? a[j] : 0.0;
      diff[j] = F_[j] * (std::polar(1.0, al) - std::polar(1.0, e[j]));
    }
    return std::sqrt(h_half_seminorm_sq(diff));
  }

 private:
  PhaseAnsatz block_ansatz(const std::vector<double>& x, std::size_t first_block, int winding,
                           double c0) const {
    PhaseAnsatz z;
    z.winding = winding;
    z.c0 = c0;
    z.a.resize(static_cast<std::size_t>(K_));
    z.b.resize(static_cast<std::size_t>(K_));
    for (int k = 1; k <= K_; ++k) {
      z.a[static_cast<std::size_t>(k - 1)] = x[1 + first_block * K_ + static_cast<std::size_t>(k - 1)] / k;
      z.b[static_cast<std::size_t>(k - 1)] =
          x[1 + (first_block + 1) * K_ + static_cast<std::size_t>(k - 1)] / k;
    }
    return z;
  }

  std::vector<cplx> F_;
  std::vector<double> dphi_;
  int eta_winding_;
  bool free_f_;
  Kind kind_;
  double p_;
  int K_;
};

Kind classify(const SobolevIndex& index) {
  if (index.s == 1.0) return Kind::w1p;
  if (index.s == 0.5 && index.p == 2.0) return Kind::h_half;
  throw IndexOutOfRange("optimizer supports s = 1 (any p >= 1) and (s, p) = (1/2, 2) only");
}

// Restricts fun to the coordinates in idx, other coordinates frozen at base.
Fn restricted(const Problem& prob, const std::vector<double>& base, const std::vector<std::size_t>& idx) {
  return [&prob, base, idx](const std::vector<double>& y) {
    std::vector<double> x = base;
    for (std::size_t i = 0; i < idx.size(); ++i) x[idx[i]] = y[i];
    return prob(x);
  };
}

// A smooth unwinding ramp: eta jumps by 2 pi w over [c, c + width].
std::vector<double> ramp_phase(std::size_t M, int w, double c, double width) {
  std::vector<double> v(M);
  for (std::size_t j = 0; j < M; ++j) {
    double t = grid_theta(j, M) - c;
    t -= kTwoPi * std::floor(t / kTwoPi);
    // Lift that is w * theta plus a periodic part: ramp on [0, width] relative to c.
    const double ramp = kTwoPi * w * smooth_step(t / width);
    v[j] = ramp + w * (grid_theta(j, M) - t);
  }
  return v;
}

struct RunInput {
  std::vector<cplx> F;
  std::vector<double> dphi;
  int deg_f = 0;
};

OptimizeReport run(const RunInput& in, int d2, const SobolevIndex& index, const OptimizeBudget& budget,
                   bool free_f) {
  const Kind kind = classify(index);
  const std::size_t M = in.F.size();
  validate_grid_size(M);
  if (budget.modes < 1 || static_cast<std::size_t>(4 * budget.modes) > M) {
    throw IndexOutOfRange("optimizer needs 1 <= K <= M/4");
  }
  if (budget.restarts < 1 || budget.iterations < 1) throw IndexOutOfRange("optimizer budget must be positive");
  const int w = d2 - in.deg_f;
  const Problem prob(in.F, in.dphi, w, free_f, kind, index.p, budget.modes);

  std::vector<int> stages;
  for (int k = 1; k < budget.modes; k *= 2) stages.push_back(k);
  stages.push_back(budget.modes);
  const int per_stage = std::max(1, budget.iterations / static_cast<int>(stages.size()));

  OptimizeReport rep;
  std::vector<double> best_x;
  for (int r = 0; r < budget.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(budget.seed), static_cast<std::uint32_t>(budget.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::vector<double> x(prob.dim(), 0.0);
    if (r > 0 && w != 0 && r <= 3) {
      // Concentrated unwinding ramps of decreasing width.
      const double width = kPi / std::pow(2.0, r - 1);
      const auto ramp = ramp_phase(M, w, kTwoPi * uniform_draw(rng), width);
      x = prob.to_parameters(PhaseAnsatz::project(ramp, w, static_cast<std::size_t>(budget.modes)), nullptr);
    } else if (r > 0) {
      x[0] = kTwoPi * (uniform_draw(rng) - 0.5);
      for (int k = 1; k <= std::min(4, budget.modes); ++k) {
        x[static_cast<std::size_t>(k)] = 0.5 * normal_draw(rng);
        x[static_cast<std::size_t>(budget.modes + k)] = 0.5 * normal_draw(rng);
        if (free_f) {
          x[static_cast<std::size_t>(2 * budget.modes + k)] = 0.5 * normal_draw(rng);
          x[static_cast<std::size_t>(3 * budget.modes + k)] = 0.5 * normal_draw(rng);
        }
      }
    }
    int iteration = 0;
    bool converged = false;
    double value = prob(x);
    rep.trace.push_back({r, iteration, value});
    for (int k_active : stages) {
      const auto idx = prob.active(k_active);
      std::vector<double> y(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) y[i] = x[idx[i]];
      const Fn fun = restricted(prob, x, idx);
      int left = per_stage;
      if (idx.size() <= 24) {
        auto nm = nelder_mead(fun, y, 0.25, left / 2, 1e-10);
        y = nm.x;
        left -= nm.iterations;
        iteration += nm.iterations;
      }
      auto lb = lbfgs(fun, y, std::max(1, left));
      y = lb.x;
      iteration += lb.iterations;
      converged = lb.converged;
      for (std::size_t i = 0; i < idx.size(); ++i) x[idx[i]] = y[i];
      value = lb.value;
      rep.trace.push_back({r, iteration, value});
    }
    if (value < rep.optimizer_value) {
      rep.optimizer_value = value;
      best_x = x;
      rep.budget_exhausted = !converged;
    }
    rep.restarts_used = r + 1;
  }

  rep.parameters = best_x;
  rep.eta = prob.eta(best_x);
  rep.alpha = prob.alpha(best_x);
  const auto fields = prob.fields(best_x);
  rep.f_samples = fields.f;
  rep.g_samples = fields.g;
  for (std::size_t j = 0; j < M; ++j) {
    rep.max_phase_derivative = std::max(
        {rep.max_phase_derivative, std::fabs(fields.df_phase[j]), std::fabs(fields.dg_phase[j])});
  }
  rep.best_value = rep.optimizer_value;
  return rep;
}

RunInput input_from(const AnalyticCircleMap& f, std::size_t M) {
  RunInput in;
  const CircleMap s = f.sample(M);
  in.F.assign(s.samples().begin(), s.samples().end());
  in.dphi = f.sample_phase_derivative(M);
  in.deg_f = f.winding;
  return in;
}

RunInput input_from(const CircleMap& f) {
  if (f.piecewise()) throw MissingDerivative("optimizer: piecewise map needs an analytic derivative");
  RunInput in;
  in.F.assign(f.samples().begin(), f.samples().end());
  const auto df = spectral_derivative(f.samples());
  in.dphi.resize(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) in.dphi[j] = std::imag(std::conj(f[j]) * df[j]);
  in.deg_f = degree_winding(lift(f));
  return in;
}

void attach_class_witness(OptimizeReport& rep, int d1, int d2, const SobolevIndex& index) {
  if (index.s != 1.0) {
    rep.target = 0.0;
    return;
  }
  const double p = index.p;
  rep.target = w1p_class_distance(d1, d2, p);
  if (d1 == d2) {
    rep.witness_value = 0.0;
    rep.witness = "identity";
  } else {
    const GalleryPair z = zigzag_pair(d1, d2);
    rep.witness_value = w1p_distance(z.f, z.g, p);
    rep.witness = "zigzag";
    if (d2 == -d1 && p > 1.0 && p < 2.0) {
      const GalleryPair at = attainment_pair(d1, p);
      const double v = w1p_distance(at.f, at.g, p, 1 << 14);
      if (v < rep.witness_value) {
        rep.witness_value = v;
        rep.witness = "attainment";
      }
    }
  }
  rep.best_value = std::min(rep.optimizer_value, rep.witness_value);
  if (rep.target > 0.0) rep.gap = (rep.best_value - rep.target) / rep.target;
}

}  // namespace

OptimizeReport estimate_inf_distance(const AnalyticCircleMap& f, int d2, const SobolevIndex& index,
                                     const OptimizeBudget& budget) {
  auto rep = run(input_from(f, budget.grid), d2, index, budget, true);
  attach_class_witness(rep, f.winding, d2, index);
  return rep;
}

OptimizeReport estimate_inf_distance(const CircleMap& f, int d2, const SobolevIndex& index,
                                     const OptimizeBudget& budget) {
  const RunInput in = input_from(f);
  auto rep = run(in, d2, index, budget, true);
  attach_class_witness(rep, in.deg_f, d2, index);
  return rep;
}

OptimizeReport estimate_point_to_class(const AnalyticCircleMap& f, int d2, const SobolevIndex& index,
                                       const OptimizeBudget& budget) {
  auto rep = run(input_from(f, budget.grid), d2, index, budget, false);
  if (f.winding == d2) {
    rep.witness_value = 0.0;
    rep.witness = "identity";
    rep.best_value = 0.0;
  }
  return rep;
}

OptimizeReport estimate_point_to_class(const CircleMap& f, int d2, const SobolevIndex& index,
                                       const OptimizeBudget& budget) {
  const RunInput in = input_from(f);
  auto rep = run(in, d2, index, budget, false);
  if (in.deg_f == d2) {
    rep.witness_value = 0.0;
    rep.witness = "identity";
    rep.best_value = 0.0;
  }
  return rep;
}

// ---- attainment probe -----------------------------------------------------------------

namespace {

// min over grid rotations tau and a common phase c of the L^2 grid distance
// between (f, g) and the reference pair.
double aligned_l2(const std::vector<cplx>& f, const std::vector<cplx>& g, const CircleMap& rf,
                  const CircleMap& rg) {
  const std::size_t M = f.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t tau = 0; tau < M; ++tau) {
    cplx cross = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      const std::size_t k = (j + tau) % M;
      cross += std::conj(f[k]) * rf[j] + std::conj(g[k]) * rg[j];
    }
    // |a e^{ic} - b|^2 summed is 2 * 2M - 2 Re(e^{ic} cross), minimized by c = arg(cross).
    const double d2 = (4.0 * static_cast<double>(M) - 2.0 * std::abs(cross)) / static_cast<double>(M);
    best = std::min(best, std::sqrt(std::max(0.0, d2) * kTwoPi));
  }
  return best;
}

}  // namespace

AttainmentProbe attainment_probe(int d1, int d2, double p, const std::vector<OptimizeBudget>& budgets) {
  if (!(p >= 1.0)) throw IndexOutOfRange("attainment_probe needs p >= 1");
  AttainmentProbe probe;
  probe.d1 = d1;
  probe.d2 = d2;
  probe.p = p;
  probe.bound = w1p_class_distance(d1, d2, p);
  const SobolevIndex index(1.0, p);
  for (const auto& b : budgets) {
    probe.levels.push_back({b, estimate_inf_distance(analytic_power(d1), d2, index, b)});
  }
  if (!probe.levels.empty() && d2 == -d1 && p > 1.0 && p < 2.0) {
    const auto& last = probe.levels.back().report;
    const std::size_t M = last.f_samples.size();
    const GalleryPair ref = attainment_pair(d1, p);
    probe.distance_to_constructed = aligned_l2(last.f_samples, last.g_samples, ref.f.sample(M), ref.g.sample(M));
  }
  return probe;
}

}  // namespace hg
