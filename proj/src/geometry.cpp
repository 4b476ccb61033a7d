#include "bergtop/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bergtop {

EuclideanDisk bergman_disk(Complex zeta, double r) {
  if (!(r > 0.0)) throw ValidationError("bergman_disk: radius must be positive");
  if (!in_disk(zeta)) {
    throw ValidationError("bergman_disk: center must lie inside the disk");
  }
  const double s = std::tanh(r);
  const double s2 = s * s;
  const double a2 = std::norm(zeta);
  const double denom = 1.0 - s2 * a2;
  EuclideanDisk d;
  d.center = (1.0 - s2) / denom * zeta;
  d.radius = (1.0 - a2) * s / denom;
  return d;
}

RatioBounds bergman_disk_ratio_bounds(double r, int samples) {
  if (samples < 2) throw ValidationError("bergman_disk_ratio_bounds: need samples");
  RatioBounds b;
  b.lower = std::numeric_limits<double>::infinity();
  b.upper = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = 0.999 * i / (samples - 1);
    const EuclideanDisk d = bergman_disk(Complex{t, 0.0}, r);
    const double ratio = d.radius / (1.0 - t);
    b.lower = std::min(b.lower, ratio);
    b.upper = std::max(b.upper, ratio);
  }
  return b;
}

}  // namespace bergtop
