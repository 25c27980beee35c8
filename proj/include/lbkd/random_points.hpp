#pragma once

// Reproducible point generators. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; the conversions below are written out
// by hand (std distributions are implementation-defined) so a seed yields the
// same points on every platform.

#include <cstdint>
#include <random>

#include "lbkd/point_set.hpp"

namespace lbkd {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound), bound >= 1, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// n points uniform in [0,1)^k; payload = generation index.
PointSet uniform_points(Count n, unsigned k, std::uint64_t seed);

/// n points whose values in every dimension are a shuffled 0..n-1, so no two
/// points share a coordinate in any dimension.
PointSet distinct_points(Count n, unsigned k, Rng& rng);

/// n points with every coordinate drawn from {0, ..., alphabet-1}.
PointSet duplicate_heavy_points(Count n, unsigned k, unsigned alphabet, Rng& rng);

}  // namespace lbkd
