#pragma once

#include <vector>

#include "bergtop/poly.hpp"
#include "bergtop/types.hpp"

namespace bergtop {

/// Truncated operators are dense complex matrices with entry (l, j) =
/// <T e_j, e_l>: column j holds the image of e_j. Norms computed on a
/// truncation are lower bounds for the full operator norm; for diagonal
/// families whose supremum is attained at small index they are exact.
using TruncatedOperator = Mat;

/// Largest singular value by power iteration on T*T with a deterministic
/// start vector; stops when the Rayleigh estimate's relative change drops
/// below tol twice in a row (iteration cap 10000, then NumericError).
double op_norm(const Mat& t, double tol = 1e-12);

/// Top `count` singular values, descending (dense Jacobi SVD).
RealVec singular_values(const Mat& t, int count);

Mat adjoint(const Mat& t);

/// Pipeline composition: the result applies `first`, then `second`; the
/// matrix is second * first. Note that compressions do not commute with
/// composition: compose(PTP, PSP) only approximates P(S T)P.
Mat compose(const Mat& first, const Mat& second);

Mat add(const Mat& t, const Mat& s, Complex alpha, Complex beta);

/// Basis compression: zeroes every entry with row or column index >= m,
/// i.e. the cut-down of T to span{e_0..e_{m-1}} embedded at full size.
Mat compress(const Mat& t, int m);

/// Applies T to a polynomial of degree < dim(T) via basis coordinates.
AnalyticPoly apply_op(const Mat& t, const AnalyticPoly& f);

struct WeakConvergenceResult {
  std::vector<Complex> values;  // (compress(T,m) f)(z) along the schedule
  Complex reference;            // (T f)(z)
  double final_error = 0.0;
  bool converged = false;
};

/// Evaluates (compress(T,m) f)(z) along the schedule, each value through the
/// truncated-kernel pairing <., k_z^{(N)}>, and compares the last one with
/// (T f)(z) at the given tolerance.
WeakConvergenceResult weak_convergence_check(const Mat& t,
                                             const AnalyticPoly& f, Complex z,
                                             const std::vector<int>& schedule,
                                             double tol = 1e-10);

}  // namespace bergtop
