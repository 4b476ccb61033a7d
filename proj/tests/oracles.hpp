#pragma once

// Test-only numerical oracles, independent of the library's evaluation
// paths. The mixed Wirtinger derivative is approximated by iterated
// first-order central differences in long double, with two Richardson
// extrapolation levels on the step.

#include <complex>
#include <functional>
#include <vector>

#include "bergtop/poly.hpp"

namespace oracles {

using CLD = std::complex<long double>;
using Fn = std::function<CLD(CLD)>;

inline Fn wirtinger(Fn h, long double eps, bool conjugate_side) {
  // 5-point fourth-order central stencil per direction
  const auto d1 = [](const Fn& g, CLD w, CLD step) {
    return (-g(w + 2.0L * step) + 8.0L * g(w + step) - 8.0L * g(w - step) +
            g(w - 2.0L * step)) /
           (12.0L * std::abs(step));
  };
  return [h, eps, conjugate_side, d1](CLD w) {
    const CLD dx = d1(h, w, CLD{eps, 0});
    const CLD dy = d1(h, w, CLD{0, eps});
    const CLD i{0.0L, 1.0L};
    return conjugate_side ? 0.5L * (dx + i * dy) : 0.5L * (dx - i * dy);
  };
}

inline CLD mixed_derivative_step(const Fn& h, int alpha, int beta, CLD at,
                                 long double eps) {
  Fn g = h;
  for (int a = 0; a < alpha; ++a) g = wirtinger(g, eps, false);
  for (int b = 0; b < beta; ++b) g = wirtinger(g, eps, true);
  return g(at);
}

// Two Richardson levels on the O(eps^4) composite stencil.
inline CLD mixed_derivative(const Fn& h, int alpha, int beta, CLD at,
                            long double eps0 = 0.09L) {
  const CLD d1 = mixed_derivative_step(h, alpha, beta, at, eps0);
  const CLD d2 = mixed_derivative_step(h, alpha, beta, at, eps0 / 2.0L);
  const CLD d3 = mixed_derivative_step(h, alpha, beta, at, eps0 / 4.0L);
  const CLD r1 = (16.0L * d2 - d1) / 15.0L;
  const CLD r2 = (16.0L * d3 - d2) / 15.0L;
  return (64.0L * r2 - r1) / 63.0L;
}

// The oracle for the derivative-delta action: apply the mixed derivative to
// w -> f(w) (1 - z conj(w))^{-2} at w = zeta and flip the pairing sign.
inline std::complex<double> derivative_delta_oracle(int alpha, int beta,
                                                    std::complex<double> zeta,
                                                    const bergtop::AnalyticPoly& f,
                                                    std::complex<double> z) {
  std::vector<CLD> coeffs;
  for (int k = 0; k < f.size(); ++k) {
    coeffs.push_back(CLD{f.coeff(k).real(), f.coeff(k).imag()});
  }
  const CLD zl{z.real(), z.imag()};
  const Fn h = [coeffs, zl](CLD w) {
    CLD acc{0.0L, 0.0L};
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
      acc = acc * w + coeffs[k];
    }
    const CLD d = CLD{1.0L, 0.0L} - zl * std::conj(w);
    return acc / (d * d);
  };
  const CLD v = mixed_derivative(h, alpha, beta, CLD{zeta.real(), zeta.imag()});
  const long double sign = (alpha + beta) % 2 == 0 ? 1.0L : -1.0L;
  return {static_cast<double>(sign * v.real()),
          static_cast<double>(sign * v.imag())};
}

}  // namespace oracles
