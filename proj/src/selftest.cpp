#include "lbkd/selftest.hpp"

#include <functional>
#include <istream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "lbkd/builder.hpp"
#include "lbkd/error.hpp"
#include "lbkd/queries.hpp"
#include "lbkd/random_points.hpp"
#include "lbkd/tree_math.hpp"
#include "lbkd/verify.hpp"
#include "lbkd/widest_split.hpp"

namespace lbkd::verify {

namespace {

using Failure = std::optional<std::string>;

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Failure walkthrough_suite(std::span<const StateTable> fixtures) {
  const auto recorded = record_walkthrough(walkthrough_input());
  const auto bad = first_mismatch(fixtures, recorded);
  if (!bad.empty()) return cat("fixture '", bad, "' does not match the recorded build");
  return std::nullopt;
}

Failure tree_math_suite() {
  for (Count n = 1; n <= 1024; ++n) {
    const auto sizes = brute_subtree_sizes(n);
    const auto begins = brute_segment_begins(n);
    for (NodeIndex s = 0; s < n; ++s) {
      if (subtree_size(s, n) != sizes[s]) return cat("subtree_size(", s, ", ", n, ")");
      if (segment_begin(s, n) != begins[s]) return cat("segment_begin(", s, ", ", n, ")");
    }
  }
  return std::nullopt;
}

Failure oracle_build_suite(std::uint64_t seed) {
  Rng rng(seed);
  const Count sizes[] = {1, 2, 3, 5, 10, 31, 32, 33, 64, 255, 256, 257, 1023, 1024};
  for (unsigned k = 1; k <= 4; ++k) {
    for (const Count n : sizes) {
      for (int trial = 0; trial < 3; ++trial) {
        const PointSet points = distinct_points(n, k, rng);
        const KdTree built = build_round_robin(points);
        const KdTree expected = reference_build(points, SplitRule::round_robin);
        if (!(built.points == expected.points)) {
          return cat("round-robin n=", n, " k=", k, " trial ", trial);
        }
        const KdTree widest = build_widest(points);
        const KdTree widest_expected = reference_build(points, SplitRule::widest);
        if (!(widest.points == widest_expected.points) ||
            widest.split_dims != widest_expected.split_dims) {
          return cat("widest n=", n, " k=", k, " trial ", trial);
        }
      }
    }
  }
  return std::nullopt;
}

Failure duplicates_suite(std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(600));
    const auto k = static_cast<unsigned>(1 + rng.below(4));
    const PointSet points = duplicate_heavy_points(n, k, 3, rng);
    for (const auto& tree : {build_round_robin(points), build_widest(points)}) {
      const auto report = check_valid(tree);
      if (!report.ok()) {
        return cat(to_string(tree.rule()), " n=", n, " k=", k, ": ", report.describe());
      }
    }
  }
  return std::nullopt;
}

Failure widest_dims_suite(std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(1024));
    const auto k = static_cast<unsigned>(2 + rng.below(3));
    const KdTree tree = build_widest(uniform_points(n, k, rng.next()));
    const auto boxes = brute_subtree_boxes(tree);
    for (NodeIndex s = 0; s < n; ++s) {
      if (tree.split_dims[s] != widest_dim(boxes[s])) {
        return cat("n=", n, " k=", k, " node ", s);
      }
    }
  }
  return std::nullopt;
}

Failure queries_suite(std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(512));
    const auto k = static_cast<unsigned>(1 + rng.below(4));
    const PointSet points = uniform_points(n, k, rng.next());
    const KdTree tree = trial % 2 ? build_widest(points) : build_round_robin(points);
    std::vector<Scalar> q(k);
    for (auto& c : q) c = rng.uniform01();
    for (const Count m : {1u, 5u, 17u}) {
      if (knn(tree, q, m) != brute_knn(tree.points, q, m)) {
        return cat("knn n=", n, " k=", k, " m=", m);
      }
    }
    const Scalar r = 0.5 * rng.uniform01();
    if (radius_query(tree, q, r) != brute_radius(tree.points, q, r)) {
      return cat("radius n=", n, " k=", k, " r=", r);
    }
  }
  return std::nullopt;
}

}  // namespace

bool run_selftest(std::ostream& out, const SelftestOptions& options) {
  const std::uint64_t seed = options.seed;
  const std::pair<const char*, std::function<Failure()>> suites[] = {
      {"walkthrough", [&] { return walkthrough_suite(options.fixtures); }},
      {"tree-math", [] { return tree_math_suite(); }},
      {"oracle-build", [&] { return oracle_build_suite(seed + 1); }},
      {"duplicates", [&] { return duplicates_suite(seed + 2); }},
      {"widest-dims", [&] { return widest_dims_suite(seed + 3); }},
      {"queries", [&] { return queries_suite(seed + 4); }},
  };
  bool all = true;
  for (const auto& [name, suite] : suites) {
    Failure failure;
    try {
      failure = suite();
    } catch (const std::exception& e) {
      failure = cat("exception: ", e.what());
    }
    if (failure) {
      out << "FAIL " << name << ": " << *failure << '\n';
      all = false;
    } else {
      out << "PASS " << name << '\n';
    }
  }
  return all;
}

std::vector<StateTable> load_fixtures_json(std::istream& in) {
  std::vector<StateTable> tables;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& item : doc) {
      StateTable t;
      t.name = item.at("name").get<std::string>();
      t.tags = item.at("tags").get<std::vector<std::uint32_t>>();
      t.x = item.at("x").get<std::vector<Scalar>>();
      t.y = item.at("y").get<std::vector<Scalar>>();
      tables.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture file: ") + e.what());
  }
  return tables;
}

}  // namespace lbkd::verify
