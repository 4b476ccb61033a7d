#include "bergtop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <vector>

#include "bergtop/quadrature.hpp"

namespace bergtop {

double radial_gamma(const std::function<double(double)>& a, int n, double tol,
                    const std::vector<double>& radius_breaks) {
  if (n < 0) throw ValidationError("radial_gamma: index must be nonnegative");
  std::vector<double> breaks;
  for (double r : radius_breaks) breaks.push_back(r * r);  // substitution r^2
  const double integral = integrate_adaptive_segmented(
      [&](double r) { return a(std::sqrt(r)) * std::pow(r, n); }, 0.0, 1.0,
      tol, std::move(breaks));
  return (n + 1.0) * integral;
}

double approx_family_gamma(int n, int k) {
  if (n < 0 || k < 0) {
    throw ValidationError("approx_family_gamma: indices must be nonnegative");
  }
  return std::exp(std::lgamma(n + 4.0) + std::lgamma(k + 2.0) -
                  std::lgamma(n + k + 4.0));
}

double vertical_gamma(const std::function<double(double)>& a, double x,
                      double tol, const std::vector<double>& t_breaks) {
  if (!(x > 0.0)) throw ValidationError("vertical_gamma: x must be positive");
  const auto integrand = [&](double u) { return a(u / (2.0 * x)) * std::exp(-u); };
  // geometric seed segmentation (features of a near t = 0 must not slip
  // between the first panel's nodes) plus the caller's breakpoints mapped
  // through u = 2tx
  std::vector<double> breaks{1e-4, 1e-3, 1e-2, 0.1, 1.0, 5.0};
  for (double t : t_breaks) breaks.push_back(2.0 * t * x);
  return integrate_adaptive_segmented(integrand, 0.0, 40.0, tol,
                                      std::move(breaks));
}

double angular_gamma(const std::function<double(double)>& a, double x,
                     double tol, const std::vector<double>& theta_breaks) {
  const double pi = std::numbers::pi;
  if (x == 0.0) {
    return integrate_adaptive_segmented(a, 0.0, pi, tol, theta_breaks) / pi;
  }
  if (x > 0.0) {
    const double prefactor = 2.0 * x / (-std::expm1(-2.0 * pi * x));
    return prefactor *
           integrate_adaptive_segmented(
               [&](double t) { return a(t) * std::exp(-2.0 * x * t); }, 0.0, pi,
               tol, theta_breaks);
  }
  // x < 0: shift the exponential by pi so the weight stays <= 1.
  const double prefactor = 2.0 * x / std::expm1(2.0 * pi * x);
  return prefactor *
         integrate_adaptive_segmented(
             [&](double t) { return a(t) * std::exp(-2.0 * x * (t - pi)); },
             0.0, pi, tol, theta_breaks);
}

SpectralData SpectralData::radial(RealVec gamma) {
  SpectralData d;
  d.kind = SpectralKind::Radial;
  d.values = std::move(gamma);
  return d;
}

SpectralData SpectralData::vertical(RealVec x, RealVec gamma) {
  if (x.size() != gamma.size()) {
    throw ValidationError("SpectralData: grid/value size mismatch");
  }
  SpectralData d;
  d.kind = SpectralKind::Vertical;
  d.grid = std::move(x);
  d.values = std::move(gamma);
  return d;
}

SpectralData SpectralData::angular(RealVec x, RealVec gamma) {
  if (x.size() != gamma.size()) {
    throw ValidationError("SpectralData: grid/value size mismatch");
  }
  SpectralData d;
  d.kind = SpectralKind::Angular;
  d.grid = std::move(x);
  d.values = std::move(gamma);
  return d;
}

double SpectralData::coordinate(int i) const {
  switch (kind) {
    case SpectralKind::Radial:
      return std::log(static_cast<double>(i) + 1.0);
    case SpectralKind::Vertical:
      if (!(grid[i] > 0.0)) {
        throw ValidationError("SpectralData: vertical grid must be positive");
      }
      return std::log(grid[i]);
    case SpectralKind::Angular:
      return std::asinh(grid[i]);
  }
  return 0.0;
}

OscillationProfile oscillation_profile(const SpectralData& data,
                                       const RealVec& deltas) {
  const int n = static_cast<int>(data.values.size());
  if (n == 0) throw ValidationError("oscillation_profile: empty data");

  // Sort samples by metric coordinate once; each delta is then one sliding
  // window pass with monotone deques for the running max and min.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> coord(n);
  for (int i = 0; i < n; ++i) coord[i] = data.coordinate(i);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return coord[i] < coord[j]; });

  OscillationProfile profile;
  profile.delta = deltas;
  profile.omega.resize(deltas.size());
  for (Eigen::Index d = 0; d < deltas.size(); ++d) {
    const double delta = deltas[d];
    if (!(delta > 0.0)) {
      throw ValidationError("oscillation_profile: deltas must be positive");
    }
    double omega = 0.0;
    std::deque<int> maxq, minq;
    int lo = 0;
    for (int hi = 0; hi < n; ++hi) {
      const double v = data.values[order[hi]];
      while (!maxq.empty() && data.values[order[maxq.back()]] <= v) maxq.pop_back();
      maxq.push_back(hi);
      while (!minq.empty() && data.values[order[minq.back()]] >= v) minq.pop_back();
      minq.push_back(hi);
      while (coord[order[hi]] - coord[order[lo]] > delta) {
        if (maxq.front() == lo) maxq.pop_front();
        if (minq.front() == lo) minq.pop_front();
        ++lo;
      }
      omega = std::max(omega, data.values[order[maxq.front()]] -
                                  data.values[order[minq.front()]]);
    }
    profile.omega[d] = omega;
  }
  return profile;
}

}  // namespace bergtop
