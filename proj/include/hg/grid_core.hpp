#pragma once

// Uniform periodic grids on S^1, circle-valued maps, lifting and the three
// degree formulas (winding of a lift, Kronecker integral, Fourier moment).

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace hg {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default number of samples on S^1.
inline constexpr std::size_t kDefaultGridM = 4096;

/// Node theta_j = 2 pi j / M of the uniform grid.
inline double grid_theta(std::size_t j, std::size_t M) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(M);
}

bool is_power_of_two(std::size_t M);

/// Throws IndexOutOfRange unless M >= 16 is a power of two.
void validate_grid_size(std::size_t M);

/// Samples of a map S^1 -> S^1 at theta_j = 2 pi j / M.
///
/// Construction enforces |f_j| = 1 to 1e-12 and the grid-size rule.  The
/// `piecewise` flag marks maps whose phase is only piecewise smooth; spectral
/// differentiation of such maps rings, so routines that need a derivative
/// insist on an analytic one.
class CircleMap {
 public:
  static constexpr double kModulusTolerance = 1e-12;

  explicit CircleMap(std::vector<cplx> samples, bool piecewise = false);

  static CircleMap constant(std::size_t M, cplx value = 1.0);
  static CircleMap from_phase(std::span<const double> phase, bool piecewise = false);

  std::size_t size() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  const cplx& operator[](std::size_t j) const { return samples_[j]; }
  bool piecewise() const { return piecewise_; }

 private:
  std::vector<cplx> samples_;
  bool piecewise_ = false;
};

/// Continuous lift phi of a circle map: f_j = exp(i phi_j), with
/// phi(theta + 2 pi) - phi(theta) = 2 pi winding.
struct Phase {
  std::vector<double> values;
  int winding = 0;

  CircleMap exponentiate(bool piecewise = false) const;
};

/// Two-sided discrete Fourier coefficients a_n, -M/2 < n <= M/2, with
/// a_n = mean_j f_j e^{-i n theta_j}.
class FourierSeries {
 public:
  explicit FourierSeries(std::vector<cplx> raw_dft_normalized);

  std::size_t size() const { return coeffs_.size(); }
  /// Frequency of storage slot k (FFT ordering).
  long frequency(std::size_t k) const;
  /// Coefficient of frequency n; zero outside the resolved band.
  cplx coefficient(long n) const;
  std::span<const cplx> raw() const { return coeffs_; }

  /// Inverse transform back to grid samples.
  std::vector<cplx> synthesize() const;

 private:
  std::vector<cplx> coeffs_;  // FFT ordering, already divided by M
};

enum class Regime { subcritical, critical, supercritical };

/// Sobolev index (s, p) with s > 0, p >= 1.
struct SobolevIndex {
  double s = 1.0;
  double p = 1.0;

  SobolevIndex(double s_, double p_);

  /// Classifies s p against the dimension N.
  Regime regime(int N) const;
  bool critical(int N) const { return regime(N) == Regime::critical; }
  bool supercritical(int N) const { return regime(N) == Regime::supercritical; }
  bool subcritical(int N) const { return regime(N) == Regime::subcritical; }
};

/// A degree reported both as the raw quadrature value and rounded.
struct DegreeEstimate {
  double raw = 0.0;
  int rounded = 0;
  /// Set when raw is farther than 0.1 from the nearest integer.
  bool warning = false;
};

DegreeEstimate make_degree_estimate(double raw);

// ---- lifting and degrees -------------------------------------------------

/// Lifts f by accumulating principal arguments of successive sample ratios.
/// Throws GridTooCoarse when some |arg(f_{j+1}/f_j)| >= pi - 1e-6.
Phase lift(const CircleMap& f);

int degree_winding(const Phase& phi);

/// (1/2pi) int f ^ f' with the spectral derivative; trapezoidal rule.
/// For piecewise maps prefer the overload taking the analytic derivative.
double degree_kronecker_s1(const CircleMap& f);

/// Same integral with a caller-supplied derivative d f / d theta.
double degree_kronecker_s1(const CircleMap& f, std::span<const cplx> derivative);

/// sum_n n |a_n|^2.
double degree_fourier(const FourierSeries& F);

// ---- transforms and pointwise operations ----------------------------------

FourierSeries fourier(std::span<const cplx> values);
inline FourierSeries fourier(const CircleMap& f) { return fourier(f.samples()); }

/// Spectral derivative (multiply a_n by i n) of a periodic grid function.
std::vector<cplx> spectral_derivative(std::span<const cplx> values);

CircleMap product(const CircleMap& f, const CircleMap& g);
CircleMap conjugate(const CircleMap& f);
CircleMap power_map(int d, std::size_t M = kDefaultGridM);

/// Pointwise difference f - g as a plain grid function.
std::vector<cplx> difference(const CircleMap& f, const CircleMap& g);

void require_same_grid(std::size_t a, std::size_t b, const char* what);

}  // namespace hg
