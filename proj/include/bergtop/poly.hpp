#pragma once

#include "bergtop/rng.hpp"
#include "bergtop/types.hpp"

namespace bergtop {

/// Analytic polynomial on the unit disk, stored by Taylor coefficients c_k
/// (monomial basis z^k). Under the normalized area measure, ||z^k||^2 =
/// 1/(k+1), so the monomials sqrt(k+1) z^k form an orthonormal basis and
/// every norm or derivative below is exact coefficient arithmetic.
class AnalyticPoly {
 public:
  AnalyticPoly() : coeffs_(Vec::Zero(1)) {}
  explicit AnalyticPoly(Vec coeffs);

  /// Orthonormal basis element e_k = sqrt(k+1) z^k.
  static AnalyticPoly basis(int k);

  /// sum_{k<n} conj(e_k(z)) e_k; pairs exactly with polynomials of
  /// degree < n: <f, truncated_kernel(z,n)> = f(z).
  static AnalyticPoly truncated_kernel(Complex z, int n);

  int size() const { return static_cast<int>(coeffs_.size()); }
  int degree() const { return size() - 1; }
  const Vec& coeffs() const { return coeffs_; }

  Complex coeff(int k) const {
    return (k >= 0 && k < size()) ? coeffs_[k] : Complex{0.0, 0.0};
  }

  /// Coordinate a_k = c_k / sqrt(k+1) with respect to the basis e_k.
  Complex basis_coord(int k) const {
    return coeff(k) / std::sqrt(static_cast<double>(k) + 1.0);
  }

  /// First n basis coordinates, zero-padded past the degree.
  Vec basis_coords(int n) const;

  /// Rebuild from basis coordinates: c_k = a_k sqrt(k+1).
  static AnalyticPoly from_basis_coords(const Vec& a);

  Complex operator()(Complex z) const;  // Horner

  /// Exact m-th complex derivative: coefficient shift-and-multiply.
  AnalyticPoly derivative(int order) const;

  double squared_norm() const;
  double norm() const { return std::sqrt(squared_norm()); }

  AnalyticPoly operator+(const AnalyticPoly& other) const;
  AnalyticPoly operator-(const AnalyticPoly& other) const;
  AnalyticPoly operator*(Complex scalar) const;

 private:
  Vec coeffs_;
};

inline AnalyticPoly operator*(Complex scalar, const AnalyticPoly& f) {
  return f * scalar;
}

/// e_k(z) = sqrt(k+1) z^k.
Complex eval_basis(int k, Complex z);

/// Reproducing kernel k_z(w) = (1 - conj(z) w)^{-2}. Rejects arguments
/// within kBoundaryMargin of the unit circle.
Complex kernel(Complex z, Complex w);

/// Exact inner product sum_k c_k(f) conj(c_k(g)) / (k+1).
Complex inner_product(const AnalyticPoly& f, const AnalyticPoly& g);

/// Uniform-coefficient random polynomial of the given degree, scaled to
/// unit Bergman norm. Deterministic for a fixed generator state.
AnalyticPoly random_unit_poly(SplitMix64& rng, int degree);

}  // namespace bergtop
