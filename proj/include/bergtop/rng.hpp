#pragma once

#include <cstdint>

#include "bergtop/types.hpp"

namespace bergtop {

/// SplitMix64: tiny deterministic generator (Steele/Lea/Flood mixing).
/// Used instead of <random> distributions so that a fixed seed produces
/// bit-identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  Complex complex_in_square() { return {symmetric(), symmetric()}; }

 private:
  std::uint64_t state_;
};

}  // namespace bergtop
