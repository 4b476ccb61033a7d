#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace bergtop {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Kernel-type operations reject points with |z| >= 1 - kBoundaryMargin;
/// the kernel blows up like (1-|z|)^{-2} there and amplifies roundoff.
inline constexpr double kBoundaryMargin = 1e-9;

/// Symbol supports must stay strictly inside the disk by this margin.
inline constexpr double kSupportMargin = 1e-6;

/// Invalid inputs: schema violations, supports touching the boundary,
/// dimension mismatches.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failures: non-finite samples, iteration caps hit.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool in_disk(Complex z, double margin = 0.0) {
  return std::abs(z) < 1.0 - margin;
}

}  // namespace bergtop
