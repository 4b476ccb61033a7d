#include "bergtop/poly.hpp"

#include <cmath>

namespace bergtop {

AnalyticPoly::AnalyticPoly(Vec coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) coeffs_ = Vec::Zero(1);
}

AnalyticPoly AnalyticPoly::basis(int k) {
  if (k < 0) throw ValidationError("basis: index must be nonnegative");
  Vec c = Vec::Zero(k + 1);
  c[k] = std::sqrt(static_cast<double>(k) + 1.0);
  return AnalyticPoly(std::move(c));
}

AnalyticPoly AnalyticPoly::truncated_kernel(Complex z, int n) {
  if (n < 1) throw ValidationError("truncated_kernel: order must be positive");
  if (!in_disk(z, kBoundaryMargin)) {
    throw ValidationError("truncated_kernel: point too close to the boundary");
  }
  // conj(e_k(z)) e_k has monomial coefficient (k+1) conj(z)^k.
  Vec c(n);
  Complex zbar_pow{1.0, 0.0};
  const Complex zbar = std::conj(z);
  for (int k = 0; k < n; ++k) {
    c[k] = (static_cast<double>(k) + 1.0) * zbar_pow;
    zbar_pow *= zbar;
  }
  return AnalyticPoly(std::move(c));
}

Vec AnalyticPoly::basis_coords(int n) const {
  Vec a = Vec::Zero(n);
  const int m = std::min(n, size());
  for (int k = 0; k < m; ++k) a[k] = basis_coord(k);
  return a;
}

AnalyticPoly AnalyticPoly::from_basis_coords(const Vec& a) {
  Vec c(a.size());
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    c[k] = a[k] * std::sqrt(static_cast<double>(k) + 1.0);
  }
  return AnalyticPoly(std::move(c));
}

Complex AnalyticPoly::operator()(Complex z) const {
  Complex acc{0.0, 0.0};
  for (int k = size() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

AnalyticPoly AnalyticPoly::derivative(int order) const {
  if (order < 0) throw ValidationError("derivative: order must be nonnegative");
  if (order == 0) return *this;
  if (order > degree()) return AnalyticPoly();
  Vec d(size() - order);
  for (int k = 0; k + order < size(); ++k) {
    double fall = 1.0;  // (k+order)(k+order-1)...(k+1)
    for (int i = 0; i < order; ++i) fall *= static_cast<double>(k + order - i);
    d[k] = coeffs_[k + order] * fall;
  }
  return AnalyticPoly(std::move(d));
}

double AnalyticPoly::squared_norm() const {
  double s = 0.0;
  for (int k = 0; k < size(); ++k) {
    s += std::norm(coeffs_[k]) / (static_cast<double>(k) + 1.0);
  }
  return s;
}

AnalyticPoly AnalyticPoly::operator+(const AnalyticPoly& other) const {
  Vec c = Vec::Zero(std::max(size(), other.size()));
  c.head(size()) = coeffs_;
  c.head(other.size()) += other.coeffs_;
  return AnalyticPoly(std::move(c));
}

AnalyticPoly AnalyticPoly::operator-(const AnalyticPoly& other) const {
  return *this + (other * Complex{-1.0, 0.0});
}

AnalyticPoly AnalyticPoly::operator*(Complex scalar) const {
  return AnalyticPoly(Vec(coeffs_ * scalar));
}

Complex eval_basis(int k, Complex z) {
  if (k < 0) throw ValidationError("eval_basis: index must be nonnegative");
  return std::sqrt(static_cast<double>(k) + 1.0) * std::pow(z, k);
}

Complex kernel(Complex z, Complex w) {
  if (!in_disk(z, kBoundaryMargin) || !in_disk(w, kBoundaryMargin)) {
    throw ValidationError("kernel: arguments must lie strictly inside the disk");
  }
  const Complex d = Complex{1.0, 0.0} - std::conj(z) * w;
  return 1.0 / (d * d);
}

Complex inner_product(const AnalyticPoly& f, const AnalyticPoly& g) {
  Complex s{0.0, 0.0};
  const int m = std::min(f.size(), g.size());
  for (int k = 0; k < m; ++k) {
    s += f.coeff(k) * std::conj(g.coeff(k)) / (static_cast<double>(k) + 1.0);
  }
  return s;
}

AnalyticPoly random_unit_poly(SplitMix64& rng, int degree) {
  if (degree < 0) throw ValidationError("random_unit_poly: degree must be nonnegative");
  Vec a(degree + 1);
  for (int k = 0; k <= degree; ++k) a[k] = rng.complex_in_square();
  AnalyticPoly f = AnalyticPoly::from_basis_coords(a);
  const double n = f.norm();
  if (n == 0.0) return AnalyticPoly::basis(0);  // vanishing draw, arbitrary unit
  return f * Complex{1.0 / n, 0.0};
}

}  // namespace bergtop
