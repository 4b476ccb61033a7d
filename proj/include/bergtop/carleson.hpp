#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergtop/symbols.hpp"
#include "bergtop/types.hpp"

namespace bergtop {

/// Derivative-embedding class parameters: order k (integer or half-integer)
/// and the geometric constant p in (0,1). p = 1/9 is the value the covering
/// argument yields; it is configurable and echoed in every report.
struct KClassParams {
  double k = 0.0;
  double p = 1.0 / 9.0;
};

void validate(const KClassParams& params);

enum class SupMethod { Exact, Grid };

/// Result of the weighted Carleson supremum. Grid values are lower bounds
/// of the true supremum (the search stops at |z| = 1 - 1e-4).
struct KCarlesonReport {
  double varpi = 0.0;
  Complex argsup{0.0, 0.0};
  bool vanishing = false;
  SupMethod method = SupMethod::Exact;
  double k = 0.0;
  double p = 1.0 / 9.0;
};

/// Order-conversion coefficient M_{l,k} = p^{2(k-l)} (Gamma(l+1)/Gamma(k+1))^2.
double coeff_M(double l, double k, double p);

/// k-norm of a measure-kind symbol (discrete, circle, or bounded radial
/// density):
///   sup_z |mu|(D(z, (1-|z|)/2)) (1-|z|)^{-2(k+1)} Gamma(k+1)^2 p^{-2k}.
/// Complex masses enter through their variation |mu|. A single point mass
/// uses the exact closed form; everything else is an adaptive grid search.
///
/// radial_weight_exponent e weights the supremand by (1-|z|)^e at the disk
/// center, realizing the measure transformation mu -> (1-|z|)^e mu in the
/// convention that makes the order-conversion law
///   varpi_l((1-|z|)^{2(l-k)} mu) = M_{l,k} varpi_k(mu)
/// an exact identity.
KCarlesonReport varpi(const Symbol& measure, const KClassParams& params,
                      double radial_weight_exponent = 0.0);

/// |mu|(D(center, radius)) for measure-kind symbols.
double variation_mass(const Symbol& measure, Complex center, double radius);

struct DerivativePair {
  double lhs = 0.0;  // |f^{(j)}(0)|^2
  double rhs = 0.0;  // j!^2 (j+1) ||f||^2
};

/// Central derivative bound |f^{(j)}(0)|^2 <= j!^2 (j+1) ||f||^2; the
/// constant 1 is sharp, with equality exactly on multiples of e_j.
DerivativePair central_derivative_bound(const AnalyticPoly& f, int j);

struct FormBoundReport {
  double empirical_constant = 0.0;  // max ratio over the trials
  double denominator = 0.0;         // M_{l,k}^{1/2} M_{j,k}^{1/2} varpi_k(mu)
  double max_form_value = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo check of |F_{mu,l,j}(f,g)| <= C M_{l,k}^{1/2} M_{j,k}^{1/2}
/// varpi_k(mu) ||f|| ||g|| with 2k = l + j, over random unit-norm degree-30
/// pairs. Returns the largest observed ratio (the empirical constant C).
/// Deterministic for a fixed seed. Throws NumericError if varpi vanishes
/// while the form does not.
FormBoundReport form_bound_check(const Symbol& measure, int l, int j,
                                 const KClassParams& params, int trials,
                                 std::uint64_t seed, const DiskRule& rule);

/// The derivative form F_{mu,l,j}(f,g) = int d^l f conj(d^j g) dmu itself.
Complex derivative_form(const Symbol& measure, int l, int j,
                        const AnalyticPoly& f, const AnalyticPoly& g,
                        const DiskRule& rule);

struct CollectionEntry {
  int order_left = 0;   // l
  int order_right = 0;  // j
  Symbol measure;
};

/// Collection {mu_{l,j}} of derivative measures, each of class (l+j)/2.
struct MeasureCollection {
  std::vector<CollectionEntry> entries;
};

enum class SeriesVerdict { Convergent, Divergent, Inconclusive };

const char* to_string(SeriesVerdict v);

struct SeriesReport {
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  std::vector<int> levels;  // distinct l+j values, ascending
  RealVec level_terms;      // summed weighted terms per level
  RealVec partial_sums;
  double ratio_threshold = 0.95;
  int window = 10;
  bool origin_rule = false;  // the sharper origin-supported test was used
};

/// Ratio test on the weighted term series
///   T_{l,j} = M_{l,k}^{1/2} M_{j,k}^{1/2} varpi_k(mu_{l,j}),  k = (l+j)/2,
/// aggregated per level l+j (the required entry order). Collections of point
/// masses at the origin use the sharper terms |m| l! j! sqrt((l+1)(j+1)).
/// CONVERGENT if the last `window` level ratios are all <= 0.95, DIVERGENT
/// if the level terms are non-decreasing across the window, else
/// INCONCLUSIVE. Thresholds are heuristics and are part of the report.
SeriesReport check_norm_af_type(const MeasureCollection& collection, double p,
                                int window = 10);

enum class DecayClass { Subexponential, Exponential, Superexponential };

const char* to_string(DecayClass c);

struct DecayReport {
  DecayClass verdict = DecayClass::Exponential;
  double rate = 0.0;        // slope of |log s_n| over the tail half
  double slope_first = 0.0; // slope over the first half, for comparison
  double mean_curvature = 0.0;
  bool excluded = false;    // subexponential: cannot come from a compactly
                            // supported distributional symbol
  std::string note;
};

/// Classifies the decay of a positive sequence from the least-squares slope
/// of |log s_n| on the tail half: below eps_slope (and not convex) it is
/// SUBEXPONENTIAL; a convex trend or a tail slope well above the first-half
/// slope is SUPEREXPONENTIAL; otherwise EXPONENTIAL with the tail slope as
/// rate. Needs at least 8 strictly positive entries.
DecayReport decay_classify(const RealVec& s, double eps_slope = 0.01);

}  // namespace bergtop
