#include "lbkd/bench.hpp"

#include <chrono>
#include <json.hpp>

#include "lbkd/builder.hpp"
#include "lbkd/error.hpp"
#include "lbkd/random_points.hpp"
#include "lbkd/widest_split.hpp"

namespace lbkd {

BenchRecord run_bench(Count n, unsigned k, SplitRule mode, std::uint64_t seed, unsigned reps) {
  if (reps == 0) throw InvalidArgument("bench needs at least one repetition");
  const PointSet points = uniform_points(n, k, seed);
  std::chrono::steady_clock::duration total{};
  for (unsigned r = 0; r < reps; ++r) {
    PointSet copy = points;
    const auto start = std::chrono::steady_clock::now();
    const KdTree tree = mode == SplitRule::round_robin ? build_round_robin(std::move(copy))
                                                       : build_widest(std::move(copy));
    total += std::chrono::steady_clock::now() - start;
    if (tree.size() != n) throw Error("bench build lost points");
  }
  const double millis = std::chrono::duration<double, std::milli>(total).count() / reps;
  return BenchRecord{n, k, mode, seed, reps, millis};
}

std::string to_json_line(const BenchRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["k"] = record.k;
  j["mode"] = std::string(to_string(record.mode));
  j["seed"] = record.seed;
  j["reps"] = record.reps;
  j["millis"] = record.millis;
  return j.dump();
}

}  // namespace lbkd
