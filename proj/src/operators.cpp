#include "bergtop/operators.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "bergtop/rng.hpp"

namespace bergtop {

namespace {

// Orthonormalize the second column against the first; on rank collapse fall
// back to deterministic unit vectors so the subspace stays two-dimensional.
void reorthonormalize(Mat& q, int round) {
  const Eigen::Index n = q.rows();
  const double n0 = q.col(0).norm();
  if (n0 < 1e-150) {
    q.col(0) = Vec::Unit(n, round % n);
  } else {
    q.col(0) /= n0;
  }
  q.col(1) -= q.col(0) * (q.col(0).adjoint() * q.col(1));
  double nrm = q.col(1).norm();
  for (Eigen::Index k = 0; nrm < 1e-150 && k < n; ++k) {
    q.col(1) = Vec::Unit(n, (round + k) % n);
    q.col(1) -= q.col(0) * (q.col(0).adjoint() * q.col(1));
    nrm = q.col(1).norm();
  }
  if (nrm > 0.0) q.col(1) /= nrm;
}

}  // namespace

double op_norm(const Mat& t, double tol) {
  if (!(tol > 0.0)) throw ValidationError("op_norm: tolerance must be positive");
  if (t.rows() != t.cols() || t.rows() < 1) {
    throw ValidationError("op_norm: operator must be square and nonempty");
  }
  const Eigen::Index n = t.rows();
  if (n == 1) return std::abs(t(0, 0));

  // Rank-2 power iteration on T*T with a 2x2 Rayleigh-Ritz step per sweep.
  // The second direction resolves the +/- singular pairs that a single
  // power vector cannot separate.
  SplitMix64 rng(0x62657267746f70ULL);
  Mat q(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    q(i, 0) = rng.complex_in_square();
    q(i, 1) = rng.complex_in_square();
  }
  reorthonormalize(q, 0);

  double prev = -1.0;
  int hits = 0;
  constexpr int kMaxIter = 10000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const Mat z = t.adjoint() * (t * q);
    const Mat b = q.adjoint() * z;  // 2x2 Hermitian section
    const double b00 = b(0, 0).real();
    const double b11 = b(1, 1).real();
    const double off = std::abs(b(0, 1));
    const double mid = 0.5 * (b00 + b11);
    const double rad = std::sqrt(0.25 * (b00 - b11) * (b00 - b11) + off * off);
    const double lam = mid + rad;  // top Ritz value of T*T
    if (lam <= 0.0) return 0.0;

    // top Ritz vector y in the subspace, then the residual ||A Qy - lam Qy||
    Eigen::Vector2cd y;
    if (off == 0.0) {
      y << (b00 >= b11 ? 1.0 : 0.0), (b00 >= b11 ? 0.0 : 1.0);
    } else {
      y << b(0, 1), Complex{lam - b00, 0.0};
      y.normalize();
    }
    const Vec ritz = q * y;
    const Vec image = z * y;
    if ((image - lam * ritz).norm() <= tol * lam) return std::sqrt(lam);
    if (prev >= 0.0 && std::abs(lam - prev) <= tol * lam) {
      if (++hits >= 2) return std::sqrt(lam);
    } else {
      hits = 0;
    }
    prev = lam;
    q = z;
    reorthonormalize(q, iter + 1);
  }
  throw NumericError("op_norm: power iteration did not converge");
}

RealVec singular_values(const Mat& t, int count) {
  if (t.rows() != t.cols() || t.rows() < 1) {
    throw ValidationError("singular_values: operator must be square");
  }
  if (count < 1 || count > t.rows()) {
    throw ValidationError("singular_values: count must lie in [1, dim]");
  }
  Eigen::JacobiSVD<Mat> svd(t);
  return svd.singularValues().head(count);
}

Mat adjoint(const Mat& t) { return t.adjoint(); }

Mat compose(const Mat& first, const Mat& second) {
  if (first.rows() != second.rows() || first.cols() != second.cols() ||
      first.rows() != first.cols()) {
    throw ValidationError("compose: dimension mismatch");
  }
  return second * first;
}

Mat add(const Mat& t, const Mat& s, Complex alpha, Complex beta) {
  if (t.rows() != s.rows() || t.cols() != s.cols()) {
    throw ValidationError("add: dimension mismatch");
  }
  return alpha * t + beta * s;
}

Mat compress(const Mat& t, int m) {
  const Eigen::Index n = t.rows();
  if (m < 1 || m > n) throw ValidationError("compress: rank must lie in [1, dim]");
  Mat out = t;
  if (m < n) {
    out.bottomRows(n - m).setZero();
    out.rightCols(n - m).setZero();
  }
  return out;
}

AnalyticPoly apply_op(const Mat& t, const AnalyticPoly& f) {
  const int n = static_cast<int>(t.rows());
  if (f.degree() >= n) {
    throw ValidationError("apply_op: polynomial degree must be below the truncation");
  }
  return AnalyticPoly::from_basis_coords(t * f.basis_coords(n));
}

WeakConvergenceResult weak_convergence_check(const Mat& t,
                                             const AnalyticPoly& f, Complex z,
                                             const std::vector<int>& schedule,
                                             double tol) {
  const int n = static_cast<int>(t.rows());
  const AnalyticPoly k = AnalyticPoly::truncated_kernel(z, n);
  WeakConvergenceResult result;
  result.values.reserve(schedule.size());
  for (int m : schedule) {
    const AnalyticPoly g = apply_op(compress(t, m), f);
    result.values.push_back(inner_product(g, k));
  }
  result.reference = inner_product(apply_op(t, f), k);
  if (!result.values.empty()) {
    result.final_error = std::abs(result.values.back() - result.reference);
    result.converged = result.final_error <= tol;
  }
  return result;
}

}  // namespace bergtop
