#include "bergtop/symbols.hpp"

#include <cmath>

namespace bergtop {

namespace {

// n (n-1) ... (n-m+1); empty product for m = 0. Passes through zero when the
// chain crosses it, which is exactly the vanishing of high derivatives.
double falling(double n, int m) {
  double v = 1.0;
  for (int i = 0; i < m; ++i) v *= n - i;
  return v;
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

Complex ipow(int i) {  // i^i for integer exponent, exact
  switch (((i % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Coefficient picked up by the monomial z^n under rho^q theta^i restricted
// to the circle |w| = r (the value there is coef * e^{i n theta}).
Complex circle_mode_factor(double r, int n, int q, int i,
                           ThetaConvention conv) {
  if (conv == ThetaConvention::AnalyticIdentity) {
    // i^i (w/|w|)^{q+i} d^{q+i}: mode n -> i^i n!/(n-q-i)! r^{n-q-i}.
    const double f = falling(n, q + i);
    if (f == 0.0) return {0.0, 0.0};
    return ipow(i) * f * std::pow(r, n - q - i);
  }
  // Definition convention: theta multiplies mode n by -n/r, rho is d/dr.
  double coef = 1.0;
  for (int t = 0; t < i; ++t) coef *= -static_cast<double>(n);
  coef *= falling(static_cast<double>(n - i), q);
  if (coef == 0.0) return {0.0, 0.0};
  return coef * std::pow(r, n - i - q);
}

// Value of rho^q theta^i f on the circle of radius r at angle theta,
// assembled from the polar Fourier modes of f.
Complex circle_derivative_value(const AnalyticPoly& f, double r, int q, int i,
                                ThetaConvention conv, Complex unit) {
  // Horner in e^{i theta} over mode coefficients.
  Complex acc{0.0, 0.0};
  for (int n = f.degree(); n >= 0; --n) {
    acc = acc * unit + f.coeff(n) * circle_mode_factor(r, n, q, i, conv);
  }
  return acc;
}

double sum_abs_mass_deriv_delta(const DerivativeDeltaCollection& d) {
  // Center-derivative bound |f^{(l)}(0)| <= l! sqrt(l+1) ||f||, valid only
  // for origin-supported collections.
  double s = 0.0;
  for (const auto& t : d.terms) {
    s += std::abs(t.mass) * factorial(t.order_left) * factorial(t.order_right) *
         std::sqrt((t.order_left + 1.0) * (t.order_right + 1.0));
  }
  return s;
}

struct FormVisitor {
  const AnalyticPoly& f;
  const AnalyticPoly& g;
  const DiskRule& rule;

  FormValue operator()(const RadialSymbol& s) const {
    const auto& a = s.profile;
    const Complex v = disk_quadrature(
        [&](Complex z) { return a(std::abs(z)) * f(z) * std::conj(g(z)); },
        rule);
    return {v, std::nullopt};
  }

  FormValue operator()(const DiscreteMeasure& s) const {
    Complex v{0.0, 0.0};
    double bound = 0.0;
    for (const auto& atom : s.atoms) {
      v += atom.mass * f(atom.position) * std::conj(g(atom.position));
      const double k2 = 1.0 / std::pow(1.0 - std::norm(atom.position), 2);
      bound += std::abs(atom.mass) * k2;  // ||k_zeta||^2 = (1-|zeta|^2)^{-2}
    }
    return {v, bound};
  }

  FormValue operator()(const CircleMeasure& s) const {
    Complex v{0.0, 0.0};
    const double inv_nt = 1.0 / static_cast<double>(rule.n_theta);
    for (const auto& e : s.entries) {
      Complex ring{0.0, 0.0};
      for (int j = 0; j < rule.n_theta; ++j) {
        const Complex left = circle_derivative_value(
            f, e.radius, e.radial_order_left, e.circular_order_left,
            s.convention, rule.angular[j]);
        const Complex right = circle_derivative_value(
            g, e.radius, e.radial_order_right, 0, s.convention,
            rule.angular[j]);
        ring += left * std::conj(right);
      }
      v += e.mass * inv_nt * ring;
    }
    return {v, std::nullopt};
  }

  FormValue operator()(const DerivativeDeltaCollection& s) const {
    Complex v{0.0, 0.0};
    for (const auto& t : s.terms) {
      v += t.mass * f.derivative(t.order_left)(t.position) *
           std::conj(g.derivative(t.order_right)(t.position));
    }
    if (s.origin_supported()) return {v, sum_abs_mass_deriv_delta(s)};
    return {v, std::nullopt};
  }

  FormValue operator()(const SpectralSequenceSymbol& s) const {
    Complex v{0.0, 0.0};
    const int m = static_cast<int>(s.gamma.size());
    for (int n = 0; n < m; ++n) {
      v += s.gamma[n] * f.basis_coord(n) * std::conj(g.basis_coord(n));
    }
    const double bound =
        s.gamma.size() > 0 ? s.gamma.cwiseAbs().maxCoeff() : 0.0;
    return {v, bound};
  }

  FormValue operator()(const FiniteRankFormSymbol& s) const {
    Complex v{0.0, 0.0};
    double bound = 0.0;
    for (std::size_t j = 0; j < s.left.size(); ++j) {
      v += inner_product(f, s.left[j]) * inner_product(s.right[j], g);
      bound += s.left[j].norm() * s.right[j].norm();
    }
    return {v, bound};
  }
};

struct ElementVisitor {
  int p;
  int q;
  const DiskRule& rule;

  // Radial moment sum_i w_i a(r_i) r_i^s of the rule's radial factor.
  static double radial_moment(const RadialSymbol& s, const DiskRule& rule,
                              int power) {
    double m = 0.0;
    for (int i = 0; i < rule.n_radial(); ++i) {
      m += rule.weight[i] * s.profile(rule.radius[i]) *
           std::pow(rule.radius[i], power);
    }
    return m;
  }

  Complex operator()(const RadialSymbol& s) const {
    // e_p conj(e_q) = sqrt((p+1)(q+1)) r^{p+q} e^{i(p-q)theta}: the tensor
    // rule factors into a radial moment and an angular mode average.
    const double scale = std::sqrt((p + 1.0) * (q + 1.0));
    return scale * radial_moment(s, rule, p + q) *
           angular_mode_average(rule, p - q);
  }

  Complex operator()(const DiscreteMeasure& s) const {
    Complex v{0.0, 0.0};
    for (const auto& atom : s.atoms) {
      v += atom.mass * eval_basis(p, atom.position) *
           std::conj(eval_basis(q, atom.position));
    }
    return v;
  }

  Complex operator()(const CircleMeasure& s) const {
    Complex v{0.0, 0.0};
    const double sp = std::sqrt(p + 1.0);
    const double sq = std::sqrt(q + 1.0);
    for (const auto& e : s.entries) {
      const Complex left =
          sp * circle_mode_factor(e.radius, p, e.radial_order_left,
                                  e.circular_order_left, s.convention);
      const Complex right = sq * circle_mode_factor(e.radius, q,
                                                    e.radial_order_right, 0,
                                                    s.convention);
      v += e.mass * left * std::conj(right) * angular_mode_average(rule, p - q);
    }
    return v;
  }

  Complex operator()(const DerivativeDeltaCollection& s) const {
    // e_p^{(l)}(zeta) = sqrt(p+1) p!/(p-l)! zeta^{p-l} for l <= p.
    Complex v{0.0, 0.0};
    for (const auto& t : s.terms) {
      const int l = t.order_left, j = t.order_right;
      if (l > p || j > q) continue;
      const Complex dl = std::sqrt(p + 1.0) * falling(p, l) *
                         std::pow(t.position, p - l);
      const Complex dj = std::sqrt(q + 1.0) * falling(q, j) *
                         std::pow(t.position, q - j);
      v += t.mass * dl * std::conj(dj);
    }
    return v;
  }

  Complex operator()(const SpectralSequenceSymbol& s) const {
    if (p != q || p >= s.gamma.size()) return {0.0, 0.0};
    return s.gamma[p];
  }

  Complex operator()(const FiniteRankFormSymbol& s) const {
    Complex v{0.0, 0.0};
    for (std::size_t j = 0; j < s.left.size(); ++j) {
      v += std::conj(s.left[j].basis_coord(p)) * s.right[j].basis_coord(q);
    }
    return v;
  }
};

}  // namespace

double RadialProfile::operator()(double r) const {
  switch (kind) {
    case Kind::Const:
      return value;
    case Kind::Chi:
      return r < r1 ? 1.0 : 0.0;
    case Kind::PolyR2: {
      const double u = r * r;
      double acc = 0.0;
      for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        acc = acc * u + coeffs[k];
      }
      return acc;
    }
    case Kind::P0Family:
      return (n + 3.0) * std::pow(1.0 - r * r, n + 2);
  }
  return 0.0;
}

RadialSymbol RadialSymbol::from_profile(const RadialProfile& p) {
  RadialSymbol s;
  s.profile = p;
  s.support_radius = p.support_radius();
  s.description = p;
  return s;
}

bool DerivativeDeltaCollection::origin_supported() const {
  for (const auto& t : terms) {
    if (std::abs(t.position) > 1e-15) return false;
  }
  return !terms.empty();
}

void validate(const Symbol& s) {
  struct Checker {
    void operator()(const RadialSymbol& r) const {
      if (!r.profile) throw ValidationError("bounded_radial: missing profile");
    }
    void operator()(const DiscreteMeasure& d) const {
      for (const auto& a : d.atoms) {
        if (!in_disk(a.position, kSupportMargin)) {
          throw ValidationError("discrete: support on or near the boundary");
        }
      }
    }
    void operator()(const CircleMeasure& c) const {
      for (const auto& e : c.entries) {
        if (!(e.radius > 0.0) || e.radius > 1.0 - kSupportMargin) {
          throw ValidationError("circle: radius must lie in (0, 1) away from the boundary");
        }
        if (e.radial_order_left < 0 || e.circular_order_left < 0 ||
            e.radial_order_right < 0) {
          throw ValidationError("circle: derivative orders must be nonnegative");
        }
      }
    }
    void operator()(const DerivativeDeltaCollection& d) const {
      for (const auto& t : d.terms) {
        if (!in_disk(t.position, kSupportMargin)) {
          throw ValidationError("deriv_delta: support on or near the boundary");
        }
        if (t.order_left < 0 || t.order_right < 0) {
          throw ValidationError("deriv_delta: orders must be nonnegative");
        }
      }
    }
    void operator()(const SpectralSequenceSymbol& sp) const {
      if (sp.gamma.size() == 0) {
        throw ValidationError("spectral: empty sequence");
      }
    }
    void operator()(const FiniteRankFormSymbol& fr) const {
      if (fr.left.empty() || fr.left.size() != fr.right.size()) {
        throw ValidationError("finite_rank: lists must be nonempty and of equal length");
      }
    }
  };
  std::visit(Checker{}, s);
}

const char* symbol_kind_name(const Symbol& s) {
  struct Namer {
    const char* operator()(const RadialSymbol&) const { return "bounded_radial"; }
    const char* operator()(const DiscreteMeasure&) const { return "discrete"; }
    const char* operator()(const CircleMeasure&) const { return "circle"; }
    const char* operator()(const DerivativeDeltaCollection&) const { return "deriv_delta"; }
    const char* operator()(const SpectralSequenceSymbol&) const { return "spectral"; }
    const char* operator()(const FiniteRankFormSymbol&) const { return "finite_rank"; }
  };
  return std::visit(Namer{}, s);
}

FormValue form_eval(const Symbol& s, const AnalyticPoly& f,
                    const AnalyticPoly& g, const DiskRule& rule) {
  validate(s);
  return std::visit(FormVisitor{f, g, rule}, s);
}

Complex matrix_element(const Symbol& s, int p, int q, const DiskRule& rule) {
  if (p < 0 || q < 0) {
    throw ValidationError("matrix_element: indices must be nonnegative");
  }
  return std::visit(ElementVisitor{p, q, rule}, s);
}

Mat assemble(const Symbol& s, int dim, const DiskRule& rule) {
  if (dim < 1) throw ValidationError("assemble: dimension must be positive");
  validate(s);
  Mat t(dim, dim);
  for (int j = 0; j < dim; ++j) {     // column j = image of e_j
    for (int l = 0; l < dim; ++l) {
      t(l, j) = matrix_element(s, j, l, rule);
    }
  }
  return t;
}

Complex derivative_delta_apply(int alpha, int beta, Complex zeta,
                               const AnalyticPoly& f, Complex z) {
  if (alpha < 0 || beta < 0) {
    throw ValidationError("derivative_delta_apply: orders must be nonnegative");
  }
  if (!in_disk(zeta, kBoundaryMargin) || !in_disk(z, kBoundaryMargin)) {
    throw ValidationError("derivative_delta_apply: points must lie inside the disk");
  }
  const double sign = (alpha + beta) % 2 == 0 ? 1.0 : -1.0;
  const Complex base = Complex{1.0, 0.0} - z * std::conj(zeta);
  return sign * factorial(beta + 1) * std::pow(z, beta) *
         std::pow(base, -(2.0 + beta)) * f.derivative(alpha)(zeta);
}

Symbol finite_rank_form(std::vector<AnalyticPoly> left,
                        std::vector<AnalyticPoly> right) {
  FiniteRankFormSymbol s{std::move(left), std::move(right)};
  validate(Symbol{s});
  return s;
}

DerivativeDeltaCollection rank_one_symbol(int p, int q) {
  if (p < 0 || q < 0) throw ValidationError("rank_one_symbol: indices must be nonnegative");
  // The distributional sign (-1)^{p+q} of the derivative pairing cancels the
  // normalization's (-1)^{p+q}, so the form weight is positive.
  const double m =
      1.0 / (std::sqrt((p + 1.0) * (q + 1.0)) * factorial(p) * factorial(q));
  DerivativeDeltaCollection c;
  c.terms.push_back({Complex{0.0, 0.0}, Complex{m, 0.0}, p, q});
  return c;
}

Symbol adjoint_symbol(const Symbol& s) {
  struct Adj {
    Symbol operator()(const RadialSymbol& r) const { return r; }  // real profile
    Symbol operator()(const DiscreteMeasure& d) const {
      DiscreteMeasure out = d;
      for (auto& a : out.atoms) a.mass = std::conj(a.mass);
      return out;
    }
    Symbol operator()(const CircleMeasure& c) const {
      CircleMeasure out = c;
      for (auto& e : out.entries) {
        if (e.circular_order_left != 0) {
          throw ValidationError(
              "adjoint_symbol: circle entries with circular derivatives have "
              "no adjoint in the same class");
        }
        std::swap(e.radial_order_left, e.radial_order_right);
        e.mass = std::conj(e.mass);
      }
      return out;
    }
    Symbol operator()(const DerivativeDeltaCollection& d) const {
      DerivativeDeltaCollection out = d;
      for (auto& t : out.terms) {
        std::swap(t.order_left, t.order_right);
        t.mass = std::conj(t.mass);
      }
      return out;
    }
    Symbol operator()(const SpectralSequenceSymbol& sp) const {
      SpectralSequenceSymbol out;
      out.gamma = sp.gamma.conjugate();
      return out;
    }
    Symbol operator()(const FiniteRankFormSymbol& fr) const {
      return FiniteRankFormSymbol{fr.right, fr.left};
    }
  };
  return std::visit(Adj{}, s);
}

double support_radius(const Symbol& s) {
  struct Radius {
    double operator()(const RadialSymbol& r) const { return r.support_radius; }
    double operator()(const DiscreteMeasure& d) const {
      double m = 0.0;
      for (const auto& a : d.atoms) m = std::max(m, std::abs(a.position));
      return m;
    }
    double operator()(const CircleMeasure& c) const {
      double m = 0.0;
      for (const auto& e : c.entries) m = std::max(m, e.radius);
      return m;
    }
    double operator()(const DerivativeDeltaCollection& d) const {
      double m = 0.0;
      for (const auto& t : d.terms) m = std::max(m, std::abs(t.position));
      return m;
    }
    double operator()(const SpectralSequenceSymbol&) const { return 1.0; }
    double operator()(const FiniteRankFormSymbol&) const { return 1.0; }
  };
  return std::visit(Radius{}, s);
}

}  // namespace bergtop
