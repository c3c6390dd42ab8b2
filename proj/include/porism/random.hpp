#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "porism/geom.hpp"

namespace porism {

/// Seeded generator with platform-independent real sampling, so that every
/// randomized report is reproducible from its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits.
  double canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }
  CirclePoint circle_point() { return CirclePoint(uniform(0.0, kTwoPi)); }
  /// Uniform in the disk of the given radius.
  Point2 in_disk(double radius) {
    const double r = radius * std::sqrt(canonical());
    const double a = uniform(0.0, kTwoPi);
    return {r * std::cos(a), r * std::sin(a)};
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace porism
