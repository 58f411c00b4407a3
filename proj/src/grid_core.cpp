#include "hg/grid_core.hpp"

#include <cmath>
#include <string>

#include "hg/errors.hpp"
#include "hg/fft.hpp"

namespace hg {

bool is_power_of_two(std::size_t M) { return M != 0 && (M & (M - 1)) == 0; }

void validate_grid_size(std::size_t M) {
  if (M < 16 || !is_power_of_two(M)) {
    throw IndexOutOfRange("grid size must be a power of two >= 16, got " + std::to_string(M));
  }
}

void require_same_grid(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw GridMismatch(std::string(what) + ": grid sizes differ (" + std::to_string(a) +
                       " vs " + std::to_string(b) + ")");
  }
}

// ---- CircleMap ------------------------------------------------------------

CircleMap::CircleMap(std::vector<cplx> samples, bool piecewise)
    : samples_(std::move(samples)), piecewise_(piecewise) {
  validate_grid_size(samples_.size());
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    const double r = std::abs(samples_[j]);
    if (!(std::abs(r - 1.0) <= kModulusTolerance)) {
      throw InvalidMap("sample " + std::to_string(j) + " has modulus " + std::to_string(r));
    }
  }
}

CircleMap CircleMap::constant(std::size_t M, cplx value) {
  return CircleMap(std::vector<cplx>(M, value / std::abs(value)));
}

CircleMap CircleMap::from_phase(std::span<const double> phase, bool piecewise) {
  std::vector<cplx> s(phase.size());
  for (std::size_t j = 0; j < phase.size(); ++j) s[j] = std::polar(1.0, phase[j]);
  return CircleMap(std::move(s), piecewise);
}

CircleMap Phase::exponentiate(bool piecewise) const {
  return CircleMap::from_phase(values, piecewise);
}

// ---- FourierSeries --------------------------------------------------------

FourierSeries::FourierSeries(std::vector<cplx> raw_dft_normalized)
    : coeffs_(std::move(raw_dft_normalized)) {}

long FourierSeries::frequency(std::size_t k) const {
  const long M = static_cast<long>(coeffs_.size());
  const long n = static_cast<long>(k);
  return n <= M / 2 ? n : n - M;
}

cplx FourierSeries::coefficient(long n) const {
  const long M = static_cast<long>(coeffs_.size());
  if (n <= -M / 2 || n > M / 2) return 0.0;
  return coeffs_[static_cast<std::size_t>(n >= 0 ? n : n + M)];
}

std::vector<cplx> FourierSeries::synthesize() const { return fft::backward(coeffs_); }

FourierSeries fourier(std::span<const cplx> values) {
  auto X = fft::forward(values);
  const double inv = 1.0 / static_cast<double>(values.size());
  for (auto& x : X) x *= inv;
  return FourierSeries(std::move(X));
}

std::vector<cplx> spectral_derivative(std::span<const cplx> values) {
  FourierSeries F = fourier(values);
  std::vector<cplx> c(F.raw().begin(), F.raw().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= cplx(0.0, static_cast<double>(F.frequency(k)));
  }
  return fft::backward(c);
}

// ---- SobolevIndex ---------------------------------------------------------

SobolevIndex::SobolevIndex(double s_, double p_) : s(s_), p(p_) {
  if (!(s > 0.0) || !(p >= 1.0) || !std::isfinite(s) || !std::isfinite(p)) {
    throw IndexOutOfRange("Sobolev index requires s > 0 and p >= 1");
  }
}

Regime SobolevIndex::regime(int N) const {
  const double sp = s * p;
  const double tol = 1e-12 * std::max(1.0, static_cast<double>(N));
  if (std::abs(sp - N) <= tol) return Regime::critical;
  return sp > N ? Regime::supercritical : Regime::subcritical;
}

DegreeEstimate make_degree_estimate(double raw) {
  DegreeEstimate e;
  e.raw = raw;
  e.rounded = static_cast<int>(std::lround(raw));
  e.warning = std::abs(raw - e.rounded) > 0.1;
  return e;
}

// ---- lifting --------------------------------------------------------------

namespace {
constexpr double kLiftGapLimit = kPi - 1e-6;

double checked_gap(cplx from, cplx to, std::size_t j) {
  const double gap = std::arg(to * std::conj(from));
  if (std::abs(gap) >= kLiftGapLimit) {
    throw GridTooCoarse("angle gap " + std::to_string(gap) + " at sample " + std::to_string(j));
  }
  return gap;
}
}  // namespace

Phase lift(const CircleMap& f) {
  const std::size_t M = f.size();
  Phase phi;
  phi.values.resize(M);
  phi.values[0] = std::arg(f[0]);
  for (std::size_t j = 0; j + 1 < M; ++j) {
    phi.values[j + 1] = phi.values[j] + checked_gap(f[j], f[j + 1], j);
  }
  const double closing = phi.values[M - 1] + checked_gap(f[M - 1], f[0], M - 1);
  phi.winding = static_cast<int>(std::lround((closing - phi.values[0]) / kTwoPi));
  return phi;
}

int degree_winding(const Phase& phi) { return phi.winding; }

double degree_kronecker_s1(const CircleMap& f, std::span<const cplx> derivative) {
  require_same_grid(f.size(), derivative.size(), "degree_kronecker_s1");
  // f ^ f' = Im(conj(f) f')
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += std::imag(std::conj(f[j]) * derivative[j]);
  return sum / static_cast<double>(f.size());
}

double degree_kronecker_s1(const CircleMap& f) {
  const auto df = spectral_derivative(f.samples());
  return degree_kronecker_s1(f, df);
}

double degree_fourier(const FourierSeries& F) {
  double sum = 0.0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    sum += static_cast<double>(F.frequency(k)) * std::norm(F.raw()[k]);
  }
  return sum;
}

// ---- pointwise ------------------------------------------------------------

CircleMap product(const CircleMap& f, const CircleMap& g) {
  require_same_grid(f.size(), g.size(), "product");
  std::vector<cplx> s(f.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const cplx z = f[j] * g[j];
    s[j] = z / std::abs(z);
  }
  return CircleMap(std::move(s), f.piecewise() || g.piecewise());
}

CircleMap conjugate(const CircleMap& f) {
  std::vector<cplx> s(f.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::conj(f[j]);
  return CircleMap(std::move(s), f.piecewise());
}

CircleMap power_map(int d, std::size_t M) {
  validate_grid_size(M);
  std::vector<cplx> s(M);
  for (std::size_t j = 0; j < M; ++j) {
    // Reduce the integer phase d*j mod M first so the angle stays small.
    const long long k = (static_cast<long long>(d) * static_cast<long long>(j)) %
                        static_cast<long long>(M);
    s[j] = std::polar(1.0, grid_theta(static_cast<std::size_t>(k < 0 ? k + static_cast<long long>(M) : k), M));
  }
  return CircleMap(std::move(s));
}

std::vector<cplx> difference(const CircleMap& f, const CircleMap& g) {
  require_same_grid(f.size(), g.size(), "difference");
  std::vector<cplx> h(f.size());
  for (std::size_t j = 0; j < h.size(); ++j) h[j] = f[j] - g[j];
  return h;
}

}  // namespace hg
