#pragma once

// Semi-norms and distances between circle maps: W^{1,p} by quadrature,
// Gagliardo W^{s,p} by double sums (uniform grid or graded mesh), H^{1/2} by
// Fourier coefficients, and the sup distance.

#include <functional>
#include <span>
#include <vector>

#include "hg/analytic_map.hpp"
#include "hg/grid_core.hpp"

namespace hg {

enum class SeminormMethod { w1p_quadrature, gagliardo_quadrature, fourier_h_half, sup_norm };

struct SeminormResult {
  double value = 0.0;
  SobolevIndex index{1.0, 1.0};
  std::size_t grid = 0;
  SeminormMethod method = SeminormMethod::w1p_quadrature;
};

/// Distance used inside the Gagliardo kernel.
enum class KernelDistance { arc, chord };

// ---- W^{1,p} --------------------------------------------------------------

/// (int |f' - g'|^p)^{1/p} with spectral derivatives and the trapezoidal rule.
/// Throws MissingDerivative if either map is flagged piecewise.
double w1p_distance(const CircleMap& f, const CircleMap& g, double p);

/// Same with caller-supplied derivatives df/dtheta, dg/dtheta.
double w1p_distance(const CircleMap& f, const CircleMap& g, double p,
                    std::span<const cplx> df, std::span<const cplx> dg);

/// Composite Gauss-Legendre between the merged breakpoints of f and g, with
/// about `cells` cells over the circle.  Nodes never sit on a breakpoint.
double w1p_distance(const AnalyticCircleMap& f, const AnalyticCircleMap& g, double p,
                    std::size_t cells = kDefaultGridM);

/// int |f'|^p (no root), spectral derivative and trapezoidal rule.
double w1p_energy(const CircleMap& f, double p);

// ---- Gagliardo ------------------------------------------------------------

/// (sum_{i != j} |h_i - h_j|^p / dist(theta_i, theta_j)^{1+sp} (2 pi/M)^2)^{1/p}.
/// Throws IndexOutOfRange unless 0 < s < 1 and p >= 1.
double gagliardo_seminorm(std::span<const cplx> h, double s, double p,
                          KernelDistance kernel = KernelDistance::arc);
double gagliardo_seminorm(std::span<const double> h, double s, double p,
                          KernelDistance kernel = KernelDistance::arc);

/// Nodes of a mesh on [center - pi, center + pi], refined geometrically
/// towards `center` from spacing `r_min` up to `h_max`, uniform beyond.
struct GradedMesh {
  double center = 0.0;
  std::vector<double> nodes;  // increasing, first = center - pi, last = center + pi
  std::size_t elements() const { return nodes.size() - 1; }
};

GradedMesh graded_mesh(double center, double r_min, double ratio = 1.04, double h_max = 0.01);

/// Gagliardo semi-norm of a function known pointwise, integrated element by
/// element on a graded mesh.  Same-element pairs use the linear interpolant
/// in closed form; all other pairs use tensor Gauss-Legendre.
double gagliardo_seminorm_graded(const std::function<cplx(double)>& h, const GradedMesh& mesh,
                                 double s, double p, KernelDistance kernel = KernelDistance::arc);

// ---- H^{1/2}, sup, identities ---------------------------------------------

/// 4 pi^2 sum_n |n| |a_n|^2.
double h_half_seminorm_sq(std::span<const cplx> h);
inline double h_half_seminorm_sq(const CircleMap& f) { return h_half_seminorm_sq(f.samples()); }

double sup_distance(const CircleMap& f, const CircleMap& g);

/// max_j | |f'-g'|^2 - [cos^2((phi-psi)/2)(phi'-psi')^2 + sin^2((phi-psi)/2)(phi'+psi')^2] |
double pointwise_identity_check(std::span<const double> phi, std::span<const double> dphi,
                                std::span<const double> psi, std::span<const double> dpsi);
double pointwise_identity_check(const AnalyticCircleMap& f, const AnalyticCircleMap& g,
                                std::size_t M = kDefaultGridM);

}  // namespace hg
