#pragma once

#include <functional>

#include "bergtop/types.hpp"

namespace bergtop {

/// Eigenvalue sequence of a radial symbol: gamma_a(n) = (n+1) int_0^1
/// a(sqrt(r)) r^n dr, evaluated by adaptive Gauss-Kronrod. Piecewise
/// profiles should pass their discontinuity radii so every quadrature
/// panel sees smooth data.
double radial_gamma(const std::function<double(double)>& a, int n,
                    double tol = 1e-12,
                    const std::vector<double>& radius_breaks = {});

/// Closed form for the eigenvalues of the P0-approximating family
/// a_n(r) = (n+3)(1-r^2)^{n+2}: gamma(k) = (n+3)! (k+1)! / (n+k+3)!,
/// computed through log-gamma.
double approx_family_gamma(int n, int k);

/// Spectral function of a vertical symbol on the half-plane:
/// gamma_a(x) = 2x int_0^inf a(t) e^{-2tx} dt, x > 0. Substituting u = 2tx
/// reduces it to int_0^inf a(u/2x) e^{-u} du, truncated at u = 40 (the tail
/// is below double rounding).
double vertical_gamma(const std::function<double(double)>& a, double x,
                      double tol = 1e-11,
                      const std::vector<double>& t_breaks = {});

/// Spectral function of an angular symbol:
/// gamma_a(x) = 2x/(1-e^{-2 pi x}) int_0^pi a(theta) e^{-2 x theta} dtheta,
/// x in R; x = 0 is the removable singularity pi^{-1} int_0^pi a.
/// Negative x is evaluated through the shifted kernel e^{-2x(theta-pi)} to
/// avoid overflow.
double angular_gamma(const std::function<double(double)>& a, double x,
                     double tol = 1e-11,
                     const std::vector<double>& theta_breaks = {});

enum class SpectralKind { Radial, Vertical, Angular };

/// Spectral data with its natural metric coordinate: log(n+1) for radial
/// sequences, log x for vertical samples, arcsinh x for angular ones.
struct SpectralData {
  SpectralKind kind = SpectralKind::Radial;
  RealVec values;
  RealVec grid;  // sample locations; ignored for Radial (indices 0..N-1)

  static SpectralData radial(RealVec gamma);
  static SpectralData vertical(RealVec x, RealVec gamma);
  static SpectralData angular(RealVec x, RealVec gamma);

  /// Metric coordinate of sample i.
  double coordinate(int i) const;
};

/// omega(delta) = max |gamma(i) - gamma(j)| over pairs at metric distance
/// <= delta. Nondecreasing in delta by construction.
struct OscillationProfile {
  RealVec delta;
  RealVec omega;
};

OscillationProfile oscillation_profile(const SpectralData& data,
                                       const RealVec& deltas);

}  // namespace bergtop
