#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "bergtop/types.hpp"

namespace bergtop {

/// Gauss-Legendre nodes/weights transplanted to [0, 1]; weights sum to 1.
struct GaussLegendre {
  RealVec nodes;
  RealVec weights;
};

GaussLegendre gauss_legendre_01(int n);

/// Tensor rule for the normalized area integral pi^{-1} \iint_D f dx dy.
///
/// Radial part is Gauss-Legendre in u = r^2 (so the rule is exact for
/// integrands polynomial in r^2 up to degree 2*n_r - 1), angular part
/// is the n_theta-point uniform rule, exact for Fourier modes |m| < n_theta.
/// Total weight is 1: the normalized disk has unit area.
struct DiskRule {
  RealVec radius;   // r_i = sqrt(u_i)
  RealVec weight;   // Gauss-Legendre weights for du on [0,1]
  Vec angular;      // e^{i theta_j}, theta_j = 2 pi j / n_theta
  int n_theta = 0;

  static DiskRule make(int n_radial, int n_theta);
  int n_radial() const { return static_cast<int>(radius.size()); }
};

/// Uniform-angle average (1/n) sum_j e^{i m theta_j}; vanishes to rounding
/// unless m is a multiple of n. Computed numerically, not short-circuited:
/// the diagonality of radial operators is a quadrature fact, not an axiom.
Complex angular_mode_average(const DiskRule& rule, int mode);

/// Normalized disk integral of f over the tensor rule. Throws NumericError
/// if the integrand is non-finite at a node.
template <class F>
Complex disk_quadrature(F&& f, const DiskRule& rule) {
  Complex total{0.0, 0.0};
  const double inv_nt = 1.0 / static_cast<double>(rule.n_theta);
  for (int i = 0; i < rule.n_radial(); ++i) {
    Complex ring{0.0, 0.0};
    for (int j = 0; j < rule.n_theta; ++j) {
      const Complex z = rule.radius[i] * rule.angular[j];
      const Complex v = f(z);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw NumericError("disk_quadrature: non-finite integrand value");
      }
      ring += v;
    }
    total += rule.weight[i] * inv_nt * ring;
  }
  return total;
}

/// Adaptive Gauss-Kronrod 15(7) on [a, b]. Splits (at the golden section,
/// so features cannot hide in a panel's node-free margin across levels)
/// until the local Kronrod-Gauss discrepancy is below the halved-per-split
/// tolerance. Throws NumericError on non-finite samples.
///
/// The error estimate is sample-based: a discontinuity lying between the
/// nodes of every refinement level can in principle go undetected. Callers
/// integrating piecewise definitions should pass the breakpoints to the
/// segmented variant below.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 60);

/// Same rule applied per subinterval of [a, b] cut at the given interior
/// breakpoints (unsorted, duplicates and out-of-range values allowed).
/// With the breakpoints of a piecewise-smooth integrand supplied, every
/// panel sees smooth data and the estimate is reliable.
double integrate_adaptive_segmented(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    std::vector<double> interior_breaks,
                                    int max_depth = 60);

}  // namespace bergtop
