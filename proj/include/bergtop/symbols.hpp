#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "bergtop/poly.hpp"
#include "bergtop/quadrature.hpp"
#include "bergtop/types.hpp"

namespace bergtop {

/// Serializable description of a bounded radial profile a(r), r in [0,1].
struct RadialProfile {
  enum class Kind { Const, Chi, PolyR2, P0Family };
  Kind kind = Kind::Const;
  double value = 1.0;  // Const
  double r1 = 0.5;     // Chi: indicator of [0, r1)
  RealVec coeffs;      // PolyR2: sum_k coeffs[k] r^{2k}
  int n = 1;           // P0Family: a_n(r) = (n+3)(1-r^2)^{n+2}

  double operator()(double r) const;
  double support_radius() const { return kind == Kind::Chi ? r1 : 1.0; }
  /// Discontinuity radii, for breakpoint-aware quadrature.
  std::vector<double> breakpoints() const {
    return kind == Kind::Chi ? std::vector<double>{r1} : std::vector<double>{};
  }
};

/// Bounded radial function symbol a(|z|): the classical Toeplitz symbol.
/// The profile is sampled at quadrature nodes; no symbolic integration.
struct RadialSymbol {
  std::function<double(double)> profile;
  double support_radius = 1.0;                 // all mass within this radius
  std::optional<RadialProfile> description;    // kept for serialization

  static RadialSymbol from_profile(const RadialProfile& p);
};

struct PointAtom {
  Complex position;
  Complex mass;
};

/// Finite complex combination of point masses sum m_a delta_{zeta_a}.
struct DiscreteMeasure {
  std::vector<PointAtom> atoms;
};

/// Convention for the circular derivative on analytic data. `Definition`
/// iterates i r^{-1} d/dtheta in the polar Fourier representation (mode n
/// picks up a factor -n/r per application); `AnalyticIdentity` iterates
/// i (w/|w|) d/dw as i^i (w/|w|)^{q+i} d^{q+i}. The two differ on modes by
/// a factor of -i per circular derivative.
enum class ThetaConvention { Definition, AnalyticIdentity };

/// One circle r = radius carrying mass * normalized arc length, paired with
/// radial/circular derivative orders: the form integrates
/// (rho^{dr_left} theta^{dtheta_left} f) conj(rho^{dr_right} g) over the circle.
struct CircleEntry {
  double radius = 0.5;
  Complex mass{1.0, 0.0};
  int radial_order_left = 0;
  int circular_order_left = 0;
  int radial_order_right = 0;
};

struct CircleMeasure {
  std::vector<CircleEntry> entries;
  ThetaConvention convention = ThetaConvention::Definition;
};

/// One term m f^{(l)}(zeta) conj(g^{(j)}(zeta)) of a derivative-of-delta
/// form; order_left acts on the operator argument.
struct DeltaDerivativeTerm {
  Complex position;
  Complex mass;
  int order_left = 0;
  int order_right = 0;
};

struct DerivativeDeltaCollection {
  std::vector<DeltaDerivativeTerm> terms;
  /// All support points at the origin: matrix elements then have the closed
  /// form m p! q! sqrt((p+1)(q+1)) delta_{l,p} delta_{j,q}.
  bool origin_supported() const;
};

/// Diagonal symbol: F(f,g) = sum gamma(n) a_n(f) conj(a_n(g)) over the
/// stored length, a_n the orthonormal-basis coordinates.
struct SpectralSequenceSymbol {
  Vec gamma;
};

/// F(f,g) = sum_j <f, left_j> <right_j, g>; the operator maps
/// f -> sum_j <f, left_j> right_j.
struct FiniteRankFormSymbol {
  std::vector<AnalyticPoly> left;
  std::vector<AnalyticPoly> right;
};

using Symbol = std::variant<RadialSymbol, DiscreteMeasure, CircleMeasure,
                            DerivativeDeltaCollection, SpectralSequenceSymbol,
                            FiniteRankFormSymbol>;

/// Checks the class invariants (supports strictly inside the disk, positive
/// circle radii, nonnegative orders, matching list lengths).
/// Throws ValidationError with a description of the first violation.
void validate(const Symbol& s);

const char* symbol_kind_name(const Symbol& s);

struct FormValue {
  Complex value;
  /// A priori bound |F(f,g)| <= bound * ||f|| ||g|| when one is cheap to
  /// certify for the class; absent otherwise.
  std::optional<double> bound;
};

/// Evaluates the sesquilinear form F(f, g) of the symbol. Linear in f,
/// conjugate-linear in g. The disk rule is used by the radial and circle
/// classes; the others are exact coefficient arithmetic.
FormValue form_eval(const Symbol& s, const AnalyticPoly& f,
                    const AnalyticPoly& g, const DiskRule& rule);

/// <T e_p, e_q> = F(e_p, e_q). For the quadrature-backed classes this uses
/// the tensor factorization of the same rule (radial moment times angular
/// mode average), so repeated calls and whole-matrix assembly agree exactly.
Complex matrix_element(const Symbol& s, int p, int q, const DiskRule& rule);

/// N x N truncation: entry (l, j) = matrix_element(s, j, l), column j being
/// the image of e_j.
Mat assemble(const Symbol& s, int dim, const DiskRule& rule);

/// Closed-form action of the operator with symbol the derivative of a point
/// mass at zeta, differentiated alpha times analytically and beta times
/// anti-analytically:
///   (-1)^{alpha+beta} (beta+1)! z^beta (1 - z conj(zeta))^{-(2+beta)} f^{(alpha)}(zeta).
Complex derivative_delta_apply(int alpha, int beta, Complex zeta,
                               const AnalyticPoly& f, Complex z);

/// Builds the finite-rank symbol; throws on empty or mismatched lists.
Symbol finite_rank_form(std::vector<AnalyticPoly> left,
                        std::vector<AnalyticPoly> right);

/// Normalized derivative-delta collection at the origin realizing the rank
/// one operator f -> <f, e_p> e_q (single matrix entry 1 at row q, col p).
DerivativeDeltaCollection rank_one_symbol(int p, int q);

/// Symbol of the adjoint operator, for the classes where it stays in the
/// same class: conjugated weights, with derivative orders swapped where the
/// form is order-asymmetric. Circle entries require circular order 0.
Symbol adjoint_symbol(const Symbol& s);

/// Largest radius of the symbol's support (1.0 when it may touch the
/// boundary, e.g. full-support radial densities).
double support_radius(const Symbol& s);

}  // namespace bergtop
