#pragma once

#include "bergtop/types.hpp"

namespace bergtop {

struct EuclideanDisk {
  Complex center;
  double radius = 0.0;
};

/// The hyperbolic (Bergman-metric) ball of radius r about zeta, which is a
/// Euclidean disk: with s = tanh r, center (1-s^2) zeta / (1-s^2|zeta|^2)
/// and radius (1-|zeta|^2) s / (1-s^2|zeta|^2). Always contained in the
/// unit disk.
EuclideanDisk bergman_disk(Complex zeta, double r);

struct RatioBounds {
  double lower = 0.0;  // empirical kappa_1
  double upper = 0.0;  // empirical kappa_2
};

/// Sweeps |zeta| in [0, 0.999] at fixed hyperbolic radius r and returns the
/// extreme values of radius / (1 - |zeta|). These are the inclusion
/// constants: D(center, k1 (1-|zeta|)) subset B(zeta,r) subset
/// D(center, k2 (1-|zeta|)).
RatioBounds bergman_disk_ratio_bounds(double r, int samples = 2000);

}  // namespace bergtop
