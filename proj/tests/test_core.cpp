#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bergtop/geometry.hpp"
#include "bergtop/poly.hpp"
#include "bergtop/quadrature.hpp"
#include "bergtop/rng.hpp"

using namespace bergtop;

namespace {
const DiskRule& rule() {
  static const DiskRule r = DiskRule::make(64, 256);
  return r;
}
}  // namespace

TEST_CASE("gauss-legendre weights are positive and sum to one") {
  const GaussLegendre gl = gauss_legendre_01(64);
  CHECK(gl.weights.minCoeff() > 0.0);
  CHECK(gl.weights.sum() == doctest::Approx(1.0).epsilon(1e-13));
  // exactness on polynomials in u up to degree 2n-1
  double moment3 = 0.0;
  for (int i = 0; i < 64; ++i) moment3 += gl.weights[i] * std::pow(gl.nodes[i], 3);
  CHECK(moment3 == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("disk rule integrates the normalized area to one") {
  const Complex one = disk_quadrature([](Complex) { return Complex{1.0, 0.0}; }, rule());
  CHECK(std::abs(one - 1.0) < 1e-13);
  const Complex r2 = disk_quadrature([](Complex z) { return Complex{std::norm(z), 0.0}; }, rule());
  CHECK(std::abs(r2 - 0.5) < 1e-13);
  const Complex e1 = disk_quadrature(
      [](Complex z) { return eval_basis(1, z) * std::conj(eval_basis(1, z)); }, rule());
  CHECK(std::abs(e1 - 1.0) < 1e-13);
}

TEST_CASE("disk quadrature rejects non-finite integrands") {
  CHECK_THROWS_AS(disk_quadrature(
                      [](Complex z) {
                        return Complex{1.0 / (std::abs(z) - std::abs(z)), 0.0};
                      },
                      rule()),
                  NumericError);
}

TEST_CASE("basis evaluation") {
  CHECK(eval_basis(0, Complex{0.7, 0.0}) == Complex{1.0, 0.0});
  CHECK(std::abs(eval_basis(3, Complex{0.5, 0.0}) - 0.25) < 1e-15);
}

TEST_CASE("orthonormality of e_k under the quadrature oracle") {
  // exactness of the tensor rule: angular kills p != q, Gauss handles r^{p+q}
  for (int p = 0; p <= 20; ++p) {
    for (int q = 0; q <= 20; ++q) {
      const Complex v = disk_quadrature(
          [&](Complex z) { return eval_basis(p, z) * std::conj(eval_basis(q, z)); },
          rule());
      const double expected = p == q ? 1.0 : 0.0;
      CHECK(std::abs(v - expected) < 1e-12);
    }
  }
}

TEST_CASE("inner product: orthonormality, positivity, quadrature agreement") {
  for (int p = 0; p <= 12; ++p) {
    for (int q = 0; q <= 12; ++q) {
      const Complex ip = inner_product(AnalyticPoly::basis(p), AnalyticPoly::basis(q));
      CHECK(std::abs(ip - (p == q ? 1.0 : 0.0)) < 1e-15);
    }
  }
  SplitMix64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const AnalyticPoly f = random_unit_poly(rng, 10);
    const AnalyticPoly g = random_unit_poly(rng, 10);
    CHECK(inner_product(f, f).imag() == 0.0);
    CHECK(inner_product(f, f).real() > 0.0);
    const Complex quad = disk_quadrature(
        [&](Complex z) { return f(z) * std::conj(g(z)); }, rule());
    CHECK(std::abs(quad - inner_product(f, g)) < 1e-12);
  }
  CHECK(inner_product(AnalyticPoly(), AnalyticPoly()) == Complex{0.0, 0.0});
}

TEST_CASE("kernel values, symmetry, and boundary rejection") {
  CHECK(kernel(Complex{0.0, 0.0}, Complex{0.3, 0.2}) == Complex{1.0, 0.0});
  CHECK(std::abs(kernel(Complex{0.5, 0.0}, Complex{0.5, 0.0}) - 16.0 / 9.0) < 1e-14);
  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Complex z = std::polar(0.95 * rng.uniform(), 6.28 * rng.uniform());
    const Complex w = std::polar(0.95 * rng.uniform(), 6.28 * rng.uniform());
    CHECK(kernel(z, w) == std::conj(kernel(w, z)));  // exact
  }
  CHECK_THROWS_AS(kernel(Complex{1.0, 0.0}, Complex{0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(kernel(Complex{0.0, 0.0}, Complex{0.0, 1.0 - 1e-10}), ValidationError);
}

TEST_CASE("truncated kernel reproduces low-degree polynomials") {
  for (int n = 1; n <= 6; ++n) {
    const AnalyticPoly k0 = AnalyticPoly::truncated_kernel(Complex{0.0, 0.0}, n);
    CHECK(k0.degree() == n - 1);
    CHECK(std::abs(k0.coeff(0) - 1.0) < 1e-16);
    for (int j = 1; j < n; ++j) CHECK(std::abs(k0.coeff(j)) == 0.0);
  }
  const AnalyticPoly f = AnalyticPoly::basis(2);
  const Complex v = inner_product(f, AnalyticPoly::truncated_kernel(Complex{0.4, 0.0}, 5));
  CHECK(std::abs(v - std::sqrt(3.0) * 0.16) < 1e-15);
  const Complex e3 = inner_product(AnalyticPoly::basis(3),
                                   AnalyticPoly::truncated_kernel(Complex{0.5, 0.0}, 8));
  CHECK(std::abs(e3 - 0.25) < 1e-15);

  // reproducing property over a grid of points and random polynomials
  SplitMix64 rng(3);
  for (int t = 0; t < 6; ++t) {
    const AnalyticPoly g = random_unit_poly(rng, 9);
    for (double x : {-0.8, -0.3, 0.0, 0.45, 0.9}) {
      const Complex z{x, 0.25 * x};
      const Complex via_kernel =
          inner_product(g, AnalyticPoly::truncated_kernel(z, 10));
      CHECK(std::abs(via_kernel - g(z)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(AnalyticPoly::truncated_kernel(Complex{0.2, 0.0}, 0), ValidationError);
}

TEST_CASE("truncated kernel tail decays geometrically with ratio |z|") {
  const Complex z{0.6, 0.0};
  const double t = std::norm(z);
  const AnalyticPoly deep = AnalyticPoly::truncated_kernel(z, 200);
  double previous = -1.0;
  for (int n = 10; n <= 20; ++n) {
    const AnalyticPoly head = AnalyticPoly::truncated_kernel(z, n);
    const double tail = (deep - head).norm();
    // analytic tail: sum_{k>=n} (k+1) t^k = t^n (n+1 - n t) / (1-t)^2
    const double expected =
        std::sqrt(std::pow(t, n) * (n + 1 - n * t)) / (1.0 - t);
    CHECK(tail == doctest::Approx(expected).epsilon(1e-12));
    if (previous > 0.0) {
      const double ratio = tail / previous;
      CHECK(ratio > 0.5 * std::abs(z));
      CHECK(ratio < 1.2 * std::abs(z));
    }
    previous = tail;
  }
}

TEST_CASE("polynomial derivatives are exact coefficient arithmetic") {
  for (int j = 0; j <= 8; ++j) {
    const AnalyticPoly d = AnalyticPoly::basis(j).derivative(j);
    CHECK(d.degree() == 0);
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= i;
    CHECK(std::abs(d.coeff(0) - std::sqrt(j + 1.0) * fact) < 1e-9 * fact);
  }
  SplitMix64 rng(5);
  const AnalyticPoly f = random_unit_poly(rng, 7);
  const AnalyticPoly same = f.derivative(0);
  for (int k = 0; k <= 7; ++k) CHECK(same.coeff(k) == f.coeff(k));
  CHECK(AnalyticPoly::basis(2).derivative(3).squared_norm() == 0.0);
}

TEST_CASE("derivative/inner-product consistency against quadrature") {
  SplitMix64 rng(13);
  for (int t = 0; t < 5; ++t) {
    const AnalyticPoly f = random_unit_poly(rng, 9);
    const AnalyticPoly g = random_unit_poly(rng, 9);
    const AnalyticPoly fp = f.derivative(1);
    const Complex coeff_route = inner_product(fp, g);
    const Complex quad_route = disk_quadrature(
        [&](Complex z) { return fp(z) * std::conj(g(z)); }, rule());
    CHECK(std::abs(coeff_route - quad_route) < 1e-10);
  }
}

TEST_CASE("bergman disk closed form") {
  const EuclideanDisk d0 = bergman_disk(Complex{0.0, 0.0}, 0.8);
  CHECK(std::abs(d0.center) == 0.0);
  CHECK(d0.radius == doctest::Approx(std::tanh(0.8)).epsilon(1e-15));

  const double r = std::atanh(0.5);
  const EuclideanDisk d = bergman_disk(Complex{0.5, 0.0}, r);
  CHECK(std::abs(d.center - Complex{0.4, 0.0}) < 1e-14);
  CHECK(d.radius == doctest::Approx(0.4).epsilon(1e-14));

  CHECK_THROWS_AS(bergman_disk(Complex{1.0, 0.0}, 1.0), ValidationError);
}

TEST_CASE("bergman disks stay inside the unit disk") {
  SplitMix64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const Complex zeta = 0.999 * rng.complex_in_square();
    if (!in_disk(zeta)) continue;
    const double r = 0.05 + 2.0 * rng.uniform();
    const EuclideanDisk d = bergman_disk(zeta, r);
    CHECK(std::abs(d.center) + d.radius < 1.0);
  }
}

TEST_CASE("bergman disk inclusion constants stay in a bounded band") {
  for (double r : {0.25, 0.5, 1.0}) {
    const RatioBounds b = bergman_disk_ratio_bounds(r);
    CHECK(b.lower > 0.0);
    CHECK(std::isfinite(b.upper));
    CHECK(b.lower <= b.upper);
    // closed-form extremes of s(1+t)/(1-s^2 t^2) over t in [0, 0.999]
    const double s = std::tanh(r);
    CHECK(b.lower == doctest::Approx(s).epsilon(1e-12));
    const double t = 0.999;
    CHECK(b.upper == doctest::Approx(s * (1.0 + t) / (1.0 - s * s * t * t)).epsilon(1e-12));
    MESSAGE("r=", r, " kappa1=", b.lower, " kappa2=", b.upper);
  }
}

TEST_CASE("deterministic random polynomials") {
  SplitMix64 a(42), b(42);
  const AnalyticPoly f = random_unit_poly(a, 12);
  const AnalyticPoly g = random_unit_poly(b, 12);
  CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 0; k <= 12; ++k) CHECK(f.coeff(k) == g.coeff(k));
}
