#include "bergtop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bergtop {

GaussLegendre gauss_legendre_01(int n) {
  if (n < 1) throw ValidationError("gauss_legendre_01: need at least one node");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  // Roots of P_n by Newton iteration from the Chebyshev-like initial guess;
  // only half the roots are computed, the rest follow by symmetry.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) < std::numeric_limits<double>::epsilon()) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    // Map [-1,1] -> [0,1]: node (1+x)/2, weight w/2.
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

DiskRule DiskRule::make(int n_radial, int n_theta) {
  if (n_radial < 1 || n_theta < 1) {
    throw ValidationError("DiskRule: node counts must be positive");
  }
  DiskRule rule;
  const GaussLegendre gl = gauss_legendre_01(n_radial);
  rule.radius = gl.nodes.array().sqrt().matrix();
  rule.weight = gl.weights;
  rule.n_theta = n_theta;
  rule.angular.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_theta;
    rule.angular[j] = std::polar(1.0, theta);
  }
  return rule;
}

Complex angular_mode_average(const DiskRule& rule, int mode) {
  Complex sum{0.0, 0.0};
  for (int j = 0; j < rule.n_theta; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / rule.n_theta;
    sum += std::polar(1.0, mode * theta);
  }
  return sum / static_cast<double>(rule.n_theta);
}

namespace {

// Gauss-Kronrod 15(7) abscissae and weights on [-1, 1] (QUADPACK values).
constexpr double kKronrodNode[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kKronrodWeight[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGaussWeight[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKronrodNode[i]);
    fv[14 - i] = f(c + h * kKronrodNode[i]);
  }
  fv[7] = f(c);
  double kr = 0.0;
  for (int i = 0; i < 7; ++i) kr += kKronrodWeight[i] * (fv[i] + fv[14 - i]);
  kr += kKronrodWeight[7] * fv[7];
  // Gauss-7 reuses the odd Kronrod abscissae.
  double gs = kGaussWeight[3] * fv[7];
  for (int i = 0; i < 3; ++i) {
    gs += kGaussWeight[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  }
  if (!std::isfinite(kr)) {
    throw NumericError("integrate_adaptive: non-finite integrand sample");
  }
  return {kr * h, std::abs(kr - gs) * h};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth) {
  const PanelResult r = gk15(f, a, b);
  if (r.error <= tol || depth <= 0) return r.kronrod;
  // Golden-section split: a jump hiding in the node-free margin next to a
  // panel endpoint cannot stay hidden, since its relative offset from the
  // endpoint grows by 1/0.382 per level until the nodes straddle it.
  const double c = a + 0.6180339887498949 * (b - a);
  return adapt(f, a, c, 0.5 * tol, depth - 1) +
         adapt(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
  if (!(tol > 0.0)) throw ValidationError("integrate_adaptive: tol must be positive");
  if (a == b) return 0.0;
  return adapt(f, a, b, tol, max_depth);
}

double integrate_adaptive_segmented(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    std::vector<double> interior_breaks,
                                    int max_depth) {
  if (!(tol > 0.0)) throw ValidationError("integrate_adaptive: tol must be positive");
  std::vector<double> edges{a};
  std::sort(interior_breaks.begin(), interior_breaks.end());
  for (double x : interior_breaks) {
    if (x > edges.back() && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  const double local = tol / static_cast<double>(edges.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += adapt(f, edges[i], edges[i + 1], local, max_depth);
  }
  return total;
}

}  // namespace bergtop
