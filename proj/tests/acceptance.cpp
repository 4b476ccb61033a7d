// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. All tolerances are fixed here, in code.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "bergtop/carleson.hpp"
#include "bergtop/experiments.hpp"
#include "bergtop/operators.hpp"
#include "bergtop/rng.hpp"
#include "bergtop/spectral.hpp"
#include "bergtop/symbols.hpp"

using namespace bergtop;

namespace {

const DiskRule& rule() {
  static const DiskRule r = DiskRule::make(64, 256);
  return r;
}

void report(int id, bool ok, const char* text) {
  std::printf("ACCEPTANCE %02d [%s] %s\n", id, ok ? "PASS" : "FAIL", text);
  std::fflush(stdout);
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

}  // namespace

TEST_CASE("criterion 1: rank-one realization") {
  bool ok = true;
  for (int p = 0; p <= 8; ++p) {
    for (int q = 0; q <= 8; ++q) {
      const Mat t = assemble(rank_one_symbol(p, q), 16, rule());
      double worst = 0.0;
      for (int l = 0; l < 16; ++l) {
        for (int j = 0; j < 16; ++j) {
          const double expected = (l == q && j == p) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(t(l, j) - expected));
        }
      }
      ok = ok && worst <= 1e-10;
    }
  }
  CHECK(ok);
  report(1, ok, "derivative-delta collections assemble to the rank-one matrices");
}

TEST_CASE("criterion 2: rank-one projection approximated by radial symbols") {
  const int dim = 200;
  bool ok_closed = true, ok_quad = true;
  for (int n = 1; n <= 20; ++n) {
    const double reference = 2.0 / (n + 4.0);
    Vec closed(dim), quad(dim);
    const RadialProfile an{RadialProfile::Kind::P0Family, 1.0, 0.5, {}, n};
    for (int k = 0; k < dim; ++k) {
      const double delta0 = k == 0 ? 1.0 : 0.0;
      closed[k] = approx_family_gamma(n, k) - delta0;
      quad[k] = radial_gamma(an, k, 1e-12) - delta0;
    }
    const double norm_closed =
        op_norm(assemble(SpectralSequenceSymbol{closed}, dim, rule()), 1e-12);
    const double norm_quad =
        op_norm(assemble(SpectralSequenceSymbol{quad}, dim, rule()), 1e-12);
    ok_closed = ok_closed && std::abs(norm_closed - reference) <= 1e-10;
    ok_quad = ok_quad && std::abs(norm_quad - reference) <= 1e-8;
  }
  CHECK(ok_closed);
  CHECK(ok_quad);
  report(2, ok_closed && ok_quad,
         "norm of T_a_n - P_0 equals 2/(n+4) on the 200-truncation");
}

TEST_CASE("criterion 3: Beta-moment identity for the approximating family") {
  bool ok = true;
  for (int n = 0; n <= 20; ++n) {
    const RadialProfile an{RadialProfile::Kind::P0Family, 1.0, 0.5, {}, n};
    for (int k = 0; k <= 20; ++k) {
      ok = ok && std::abs(radial_gamma(an, k, 1e-12) - approx_family_gamma(n, k)) <= 1e-10;
    }
  }
  CHECK(ok);
  report(3, ok, "quadrature gamma matches (n+3)!(k+1)!/(n+k+3)!");
}

TEST_CASE("criterion 4: radial symbols assemble diagonally") {
  SplitMix64 rng(2024);
  bool ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    RealVec cs(5);
    for (int i = 0; i < 5; ++i) cs[i] = rng.symmetric();
    const Symbol s = RadialSymbol::from_profile(
        RadialProfile{RadialProfile::Kind::PolyR2, 1.0, 0.5, cs, 1});
    const Mat t = assemble(s, 32, rule());
    for (int l = 0; l < 32; ++l) {
      for (int j = 0; j < 32; ++j) {
        if (l != j) ok = ok && std::abs(t(l, j)) < 1e-12;
      }
    }
  }
  CHECK(ok);
  report(4, ok, "randomized bounded radial symbols have off-diagonal entries < 1e-12");
}

TEST_CASE("criterion 5: vertical and angular spectral closed forms") {
  bool ok = true;
  const double h = 0.8;
  const auto chi_v = [h](double t) { return t <= h ? 1.0 : 0.0; };
  for (int i = 0; i < 40; ++i) {
    const double x = 0.05 + (12.0 - 0.05) * i / 39.0;
    ok = ok && std::abs(vertical_gamma(chi_v, x, 1e-11, {h}) - (1.0 - std::exp(-2.0 * h * x))) <= 1e-8;
  }
  const double half_pi = 1.5707963267948966;
  const auto chi_a = [half_pi](double t) { return t <= half_pi ? 1.0 : 0.0; };
  for (int i = 0; i < 49; ++i) {
    const double x = -6.0 + 12.0 * i / 48.0;
    const double expected = 1.0 / (1.0 + std::exp(-3.141592653589793 * x));
    ok = ok && std::abs(angular_gamma(chi_a, x, 1e-11, {half_pi}) - expected) <= 1e-8;
  }
  CHECK(ok);
  report(5, ok, "chi symbols match 1 - e^{-2hx} and 1/(1 + e^{-pi x})");
}

TEST_CASE("criterion 6: singular-value decay of the indicator-disk symbol") {
  const int dim = 40;
  const RadialProfile chi{RadialProfile::Kind::Chi, 1.0, 0.7, {}, 1};
  Vec gamma(dim);
  for (int n = 0; n < dim; ++n) gamma[n] = radial_gamma(chi, n, 1e-12, chi.breakpoints());
  const Mat t = assemble(SpectralSequenceSymbol{gamma}, dim, rule());
  const RealVec s = singular_values(t, 21);
  bool ok = true;
  for (int n = 0; n <= 20; ++n) {
    ok = ok && std::abs(s[n] - std::pow(0.7, 2.0 * (n + 1))) <= 1e-8;
  }
  const DecayReport dr = decay_classify(s);
  const double target_rate = 2.0 * std::log(1.0 / 0.7);
  ok = ok && dr.verdict == DecayClass::Exponential;
  ok = ok && std::abs(dr.rate - target_rate) <= 0.02 * target_rate;

  RealVec poly(512);
  for (int n = 0; n < 512; ++n) poly[n] = std::pow(n + 1.0, -2.0);
  const DecayReport sub = decay_classify(poly);
  ok = ok && sub.verdict == DecayClass::Subexponential && sub.excluded;
  CHECK(ok);
  report(6, ok, "s_n = 0.7^{2(n+1)}, exponential rate 2 ln(1/0.7); n^{-2} excluded");
}

TEST_CASE("criterion 7: central derivative bound") {
  SplitMix64 rng(31337);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const AnalyticPoly f = random_unit_poly(rng, 30);
    for (int j = 0; j <= 10; ++j) {
      const DerivativePair b = central_derivative_bound(f, j);
      ok = ok && b.lhs <= b.rhs * (1.0 + 1e-12);
    }
  }
  for (int j = 0; j <= 10; ++j) {
    const DerivativePair eq = central_derivative_bound(AnalyticPoly::basis(j), j);
    ok = ok && std::abs(eq.lhs - eq.rhs) <= 1e-12 * eq.rhs;
  }
  CHECK(ok);
  report(7, ok, "|f^(j)(0)|^2 <= j!^2 (j+1) ||f||^2, equality on e_j");
}

TEST_CASE("criterion 8: point-mass k-norm closed form and scaling law") {
  const double p = 1.0 / 9.0;
  bool ok = true;
  for (double k = 0.0; k <= 6.0; k += 0.5) {
    for (double t : {0.0, 0.3, 0.45, 0.7, 0.9}) {
      for (double phase : {0.0, 1.0471975511965976}) {
        const Complex zeta = std::polar(t, phase);
        const double mass = 0.8;
        const double got =
            varpi(DiscreteMeasure{{{zeta, Complex{mass, 0}}}}, KClassParams{k, p}).varpi;
        const double expected = mass * std::pow(std::tgamma(k + 1.0), 2) *
                                std::pow(p, -2.0 * k) *
                                std::pow(1.5 / (1.0 - t), 2.0 * (k + 1.0));
        ok = ok && std::abs(got - expected) <= 1e-10 * expected;
      }
    }
  }
  const Symbol atom = DiscreteMeasure{{{Complex{0.35, 0.55}, Complex{1.3, -0.4}}}};
  for (double k : {0.0, 0.5, 1.0, 2.0, 3.5}) {
    for (double l : {0.0, 0.5, 1.5, 3.0, 6.0}) {
      const double lhs = varpi(atom, KClassParams{l, p}, 2.0 * (l - k)).varpi;
      const double rhs = coeff_M(l, k, p) * varpi(atom, KClassParams{k, p}).varpi;
      ok = ok && std::abs(lhs - rhs) <= 1e-12 * rhs;
    }
  }
  CHECK(ok);
  report(8, ok, "varpi closed form across integer/half-integer k; exact scaling law");
}

TEST_CASE("criterion 9: empirical boundedness constants are finite and stable") {
  bool ok = true;
  std::vector<Symbol> measures;
  measures.push_back(DiscreteMeasure{{{Complex{0.5, 0.0}, Complex{1, 0}}}});
  measures.push_back(CircleMeasure{{{0.7, Complex{1, 0}, 0, 0, 0}}});
  const std::vector<std::pair<int, int>> orders{{0, 0}, {1, 1}, {2, 0}};
  for (const Symbol& mu : measures) {
    for (auto [l, j] : orders) {
      const KClassParams params{0.5 * (l + j), 1.0 / 9.0};
      const FormBoundReport a = form_bound_check(mu, l, j, params, 500, 1001, rule());
      const FormBoundReport b = form_bound_check(mu, l, j, params, 500, 2002, rule());
      ok = ok && std::isfinite(a.empirical_constant) && a.empirical_constant > 0.0;
      ok = ok && std::abs(a.empirical_constant - b.empirical_constant) <=
                     0.2 * std::max(a.empirical_constant, b.empirical_constant);
    }
  }
  CHECK(ok);
  report(9, ok, "500-trial form bounds finite, within 20% across two seeds");
}

TEST_CASE("criterion 10: hyperfunction symbol at the origin") {
  const int order = 20, dim = 24;
  bool ok = true;

  const SeriesReport series =
      check_norm_af_type(hyperfunction_origin_collection(order), 1.0 / 9.0, 10);
  ok = ok && series.verdict == SeriesVerdict::Convergent;

  const Mat t = assemble(hyperfunction_origin_symbol(order), dim, rule());
  for (int pp = 0; pp < dim; ++pp) {
    for (int qq = 0; qq < dim; ++qq) {
      double expected = 0.0;
      if (pp < order && qq < order) {
        const double m = std::pow(4.0, -(pp + qq)) / (factorial(pp) * factorial(qq));
        expected = m * factorial(pp) * factorial(qq) *
                   std::sqrt((pp + 1.0) * (qq + 1.0));
      }
      ok = ok && std::abs(t(qq, pp) - expected) <= 5e-15 * std::max(1.0, expected);
    }
  }

  double prev = -1.0;
  for (int m = 1; m < order; ++m) {
    const double d = op_norm(compress(t, m + 1) - compress(t, m), 1e-12);
    if (prev > 0.0) ok = ok && d <= 0.5 * prev;  // geometric decrement
    prev = d;
  }
  CHECK(ok);
  report(10, ok, "origin collection convergent; exact entries; Cauchy compressions");
}

TEST_CASE("criterion 11: weak convergence of compressions") {
  const int dim = 40;
  const AnalyticPoly f = AnalyticPoly::basis(0) + AnalyticPoly::basis(1);
  std::vector<int> schedule;
  for (int m = f.degree() + 11; m <= dim; ++m) schedule.push_back(m);
  const std::vector<Complex> zs{{0.3, 0.0}, {0.0, 0.2}, {-0.25, 0.0},
                                {-0.1, -0.2}, {0.15, 0.1}};

  Vec signs(dim);
  for (int n = 0; n < dim; ++n) signs[n] = n % 2 == 0 ? 1.0 : -1.0;
  const Mat reflection = assemble(SpectralSequenceSymbol{signs}, dim, rule());
  const Mat hyper = assemble(hyperfunction_origin_symbol(20), dim, rule());

  bool ok = true;
  for (const Mat* op : {&reflection, &hyper}) {
    for (Complex z : zs) {
      const WeakConvergenceResult r = weak_convergence_check(*op, f, z, schedule, 1e-10);
      for (const Complex& v : r.values) {
        ok = ok && std::abs(v - r.reference) < 1e-10;
      }
    }
  }
  CHECK(ok);
  report(11, ok, "(compress(T,m) f)(z) within 1e-10 of (T f)(z) once m > deg f + 10");
}

TEST_CASE("criterion 12: the alternating sequence is not slowly oscillating") {
  const int n = 1024;
  RealVec alternating(n);
  for (int i = 0; i < n; ++i) alternating[i] = i % 2 == 0 ? 1.0 : -1.0;
  RealVec deltas(6);
  deltas << 0.005, 0.01, 0.05, 0.1, 0.5, 1.0;
  const OscillationProfile profile =
      oscillation_profile(SpectralData::radial(alternating), deltas);
  bool ok = true;
  for (Eigen::Index i = 0; i < deltas.size(); ++i) {
    ok = ok && std::abs(profile.omega[i] - 2.0) <= 1e-15;
  }

  SplitMix64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const double d = rng.uniform();
    RealVec gamma(128);
    gamma[0] = rng.symmetric();
    for (int i = 1; i < 128; ++i) gamma[i] = gamma[i - 1] + d * rng.symmetric();
    double sup = 0.0;
    for (int i = 0; i < 128; ++i) {
      sup = std::max(sup, std::abs((i % 2 == 0 ? 1.0 : -1.0) - gamma[i]));
    }
    ok = ok && sup >= 1.0 - 0.5 * d - 1e-12;
  }
  CHECK(ok);
  report(12, ok, "omega(delta) = 2 at every resolution; separation >= 1 - d/2");
}
