#pragma once

#include <cstdint>
#include <string>

#include "lbkd/kd_tree.hpp"

namespace lbkd {

struct BenchRecord {
  Count n = 0;
  unsigned k = 0;
  SplitRule mode = SplitRule::round_robin;
  std::uint64_t seed = 0;
  unsigned reps = 0;
  double millis = 0;  ///< mean build time per repetition
};

/// Builds `reps` trees over uniform_points(n, k, seed) and averages the build
/// time. Point generation and the per-repetition copy are not timed.
BenchRecord run_bench(Count n, unsigned k, SplitRule mode, std::uint64_t seed, unsigned reps);

/// {"n":..,"k":..,"mode":..,"seed":..,"reps":..,"millis":..}
std::string to_json_line(const BenchRecord& record);

}  // namespace lbkd
