#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "lbkd/builder.hpp"
#include "lbkd/error.hpp"
#include "lbkd/random_points.hpp"
#include "lbkd/verify.hpp"
#include "lbkd/walkthrough.hpp"
#include "test_support.hpp"

using namespace lbkd;
using lbkd::testing::column;
using lbkd::testing::points_1d;
using lbkd::testing::sorted_rows;

namespace {

const verify::StateTable& table(std::size_t i) { return verify::walkthrough_tables()[i]; }

PointSet points_of(const verify::StateTable& t) {
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    coords.push_back(t.x[i]);
    coords.push_back(t.y[i]);
  }
  return PointSet(2, std::move(coords));
}

}  // namespace

TEST(InitTags, AllZero) {
  EXPECT_EQ(init_tags(10), std::vector<std::uint32_t>(10, 0));
  EXPECT_TRUE(init_tags(0).empty());
  EXPECT_EQ(init_tags(1), std::vector<std::uint32_t>{0});
}

TEST(Less, TagIsMajorKey) {
  const Scalar a[] = {46, 63};
  const Scalar b[] = {10, 15};
  EXPECT_TRUE(less(0, a, 1, b, 0));
  EXPECT_FALSE(less(1, b, 0, a, 0));
}

TEST(Less, CoordinateBreaksEqualTags) {
  const Scalar a[] = {0, 15};
  const Scalar b[] = {0, 33};
  EXPECT_TRUE(less(3, a, 3, b, 1));
  EXPECT_FALSE(less(3, b, 3, a, 1));
}

TEST(Less, Irreflexive) {
  const Scalar a[] = {7, 7};
  const Scalar b[] = {7, 7};
  EXPECT_FALSE(less(2, a, 2, b, 0));
  EXPECT_FALSE(less(2, a, 2, a, 1));
}

TEST(SortPhase, StepZeroSortsByX) {
  PointSet points = verify::walkthrough_input();
  auto tags = init_tags(10);
  sort_phase(points, tags, 0);
  EXPECT_EQ(column(points, 0), table(1).x);
  EXPECT_EQ(column(points, 1), table(1).y);
}

TEST(SortPhase, StepOneGroupsByTagThenY) {
  PointSet points = points_of(table(2));
  auto tags = table(2).tags;
  sort_phase(points, tags, 1);
  EXPECT_EQ(tags, table(3).tags);
  EXPECT_EQ(column(points, 0), table(3).x);
  EXPECT_EQ(column(points, 1), table(3).y);
}

TEST(SortPhase, SinglePointUnchanged) {
  PointSet points = points_1d({4.5});
  auto tags = init_tags(1);
  for (unsigned l = 0; l < 3; ++l) sort_phase(points, tags, l);
  EXPECT_EQ(column(points, 0), std::vector<Scalar>{4.5});
}

TEST(UpdateTagsPhase, StepZero) {
  auto tags = table(1).tags;
  update_tags_phase(tags, 0);
  EXPECT_EQ(tags, (std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 0, 2, 2, 2}));
}

TEST(UpdateTagsPhase, StepOne) {
  auto tags = table(3).tags;
  update_tags_phase(tags, 1);
  EXPECT_EQ(tags, (std::vector<std::uint32_t>{0, 3, 3, 3, 1, 4, 4, 5, 2, 6}));
}

TEST(UpdateTagsPhase, SizeOneSegmentKeepsItsTag) {
  // n = 3 after sort at level 1: nodes 1 and 2 each hold one point.
  std::vector<std::uint32_t> tags = {0, 1, 2};
  update_tags_phase(tags, 1);
  EXPECT_EQ(tags, (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(BuildRoundRobin, WalkthroughFinalArray) {
  const KdTree tree = build_round_robin(verify::walkthrough_input());
  EXPECT_EQ(column(tree.points, 0),
            (std::vector<Scalar>{46, 15, 53, 40, 44, 68, 62, 10, 45, 25}));
  EXPECT_EQ(column(tree.points, 1),
            (std::vector<Scalar>{63, 43, 67, 33, 58, 21, 69, 15, 40, 54}));
  EXPECT_EQ(tree.shape, (TreeShape{10, 2, 4}));
  EXPECT_EQ(tree.rule(), SplitRule::round_robin);
}

TEST(BuildRoundRobin, RecordsEveryWalkthroughState) {
  const auto recorded = verify::record_walkthrough(verify::walkthrough_input());
  ASSERT_EQ(recorded.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(recorded[i], table(i)) << table(i).name;
}

TEST(BuildRoundRobin, EmptyInput) {
  BuildStats stats;
  BuildOptions options;
  options.stats = &stats;
  const KdTree tree = build_round_robin(PointSet(3), options);
  EXPECT_TRUE(tree.empty());
  EXPECT_EQ(tree.shape.levels, 0u);
  EXPECT_EQ(stats.sort_phases, 0u);
  EXPECT_EQ(stats.tag_entries, 0u);
}

TEST(BuildRoundRobin, SinglePointNoPhases) {
  BuildStats stats;
  BuildOptions options;
  options.stats = &stats;
  const PointSet input = points_1d({3.25});
  const KdTree tree = build_round_robin(input, options);
  EXPECT_EQ(tree.points, input);
  EXPECT_EQ(stats.update_phases, 0u);
  EXPECT_EQ(stats.sort_phases, 0u);
  EXPECT_EQ(stats.tag_entries, 1u);
}

TEST(BuildRoundRobin, MedianOfThreeIsRoot) {
  const KdTree tree = build_round_robin(points_1d({5, 1, 9}));
  EXPECT_EQ(column(tree.points, 0), (std::vector<Scalar>{5, 1, 9}));
  const KdTree shuffled = build_round_robin(points_1d({9, 5, 1}));
  EXPECT_EQ(column(shuffled.points, 0), (std::vector<Scalar>{5, 1, 9}));
}

TEST(BuildRoundRobin, RejectsNonFinite) {
  const Scalar nan = std::numeric_limits<Scalar>::quiet_NaN();
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  EXPECT_THROW(build_round_robin(PointSet(2, {1, 2, nan, 4})), NonFiniteCoordinate);
  EXPECT_THROW(build_round_robin(PointSet(1, {inf})), NonFiniteCoordinate);
}

TEST(BuildRoundRobin, NanRejectedBeforeAnyPhase) {
  int phases = 0;
  BuildOptions options;
  options.observer = [&](Phase, unsigned, const PointSet&, std::span<const std::uint32_t>) {
    ++phases;
  };
  const Scalar nan = std::numeric_limits<Scalar>::quiet_NaN();
  EXPECT_THROW(build_round_robin(PointSet(1, {1, 2, 3, nan}), options), NonFiniteCoordinate);
  EXPECT_EQ(phases, 0);
}

TEST(BuildRoundRobin, PhaseCountsAndTagStorage) {
  for (const Count n : {2u, 3u, 10u, 100u, 1024u, 1025u}) {
    BuildStats stats;
    BuildOptions options;
    options.stats = &stats;
    build_round_robin(uniform_points(n, 3, n), options);
    EXPECT_EQ(stats.sort_phases, num_levels(n));
    EXPECT_EQ(stats.update_phases, num_levels(n) - 1);
    EXPECT_EQ(stats.tag_entries, n);
    EXPECT_EQ(stats.tag_bytes, n * sizeof(std::uint32_t));
  }
}

// Observation 2 after every update, Observation 3 after every sort.
TEST(BuildRoundRobinProperty, TagInvariantsHoldAfterEveryPhase) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Count>(2 + rng.below(700));
    const auto k = static_cast<unsigned>(1 + rng.below(4));
    const PointSet input = trial % 2 ? distinct_points(n, k, rng)
                                     : duplicate_heavy_points(n, k, 3, rng);
    BuildOptions options;
    options.observer = [&](Phase phase, unsigned l, const PointSet& points,
                           std::span<const std::uint32_t> tags) {
      if (phase == Phase::update) {
        const Count done = full_tree_size(l + 1);
        Count shallower = 0;
        for (const auto t : tags) {
          ASSERT_LT(t, n);
          if (level(t) < l + 1) {
            ++shallower;
          } else {
            ASSERT_EQ(level(t), l + 1);
          }
        }
        ASSERT_EQ(shallower, done);
      } else if (phase == Phase::sort) {
        const Count done = full_tree_size(std::min(l, num_levels(n) - 1));
        for (Count i = 0; i < done; ++i) ASSERT_EQ(tags[i], i);
        if (l + 1 == num_levels(n)) return;
        // Every level-l segment sits at [segment_begin, +subtree_size) sorted on l mod k.
        for (NodeIndex s = full_tree_size(l); s < std::min(full_tree_size(l + 1), n); ++s) {
          const Count b = segment_begin(s, n);
          const Count e = b + subtree_size(s, n);
          for (Count i = b; i < e; ++i) {
            ASSERT_EQ(tags[i], s);
            if (i > b) ASSERT_LE(points.coord(i - 1, l % k), points.coord(i, l % k));
          }
        }
      }
    };
    build_round_robin(input, options);
  }
}

TEST(BuildRoundRobinProperty, OutputIsPermutationOfInput) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Count>(rng.below(900));
    const auto k = static_cast<unsigned>(1 + rng.below(5));
    const PointSet input = duplicate_heavy_points(n, k, 4, rng);
    const KdTree tree = build_round_robin(input);
    ASSERT_EQ(sorted_rows(tree.points), sorted_rows(input));
  }
}

TEST(BuildRoundRobinProperty, ValidUnderDuplicates) {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(1000));
    const auto k = static_cast<unsigned>(1 + rng.below(4));
    const KdTree tree = build_round_robin(duplicate_heavy_points(n, k, 3, rng));
    const auto report = verify::check_valid(tree);
    ASSERT_TRUE(report.ok()) << report.describe();
  }
}

TEST(BuildRoundRobinProperty, EqualsReferenceForDistinctCoordinates) {
  Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(2000));
    const auto k = static_cast<unsigned>(1 + rng.below(4));
    const PointSet input = distinct_points(n, k, rng);
    ASSERT_EQ(build_round_robin(input).points,
              verify::reference_build(input, SplitRule::round_robin).points);
  }
}

TEST(BuildRoundRobinProperty, OptionsDoNotChangeUniqueOutput) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<Count>(5000 + rng.below(20000));
    const PointSet input = distinct_points(n, 3, rng);
    const KdTree plain = build_round_robin(input);
    BuildOptions serial_skip;
    serial_skip.parallel = false;
    serial_skip.skip_finished_prefix = true;
    ASSERT_EQ(build_round_robin(input, serial_skip).points, plain.points);
    BuildOptions parallel_skip;
    parallel_skip.skip_finished_prefix = true;
    ASSERT_EQ(build_round_robin(input, parallel_skip).points, plain.points);
  }
}

// Skipping the finished prefix must leave every intermediate state unchanged.
TEST(BuildRoundRobinProperty, SkipPrefixPreservesEveryPhase) {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(600));
    const auto k = static_cast<unsigned>(1 + rng.below(3));
    const PointSet input = trial == 0 ? verify::walkthrough_input() : distinct_points(n, k, rng);
    std::vector<std::pair<PointSet, std::vector<std::uint32_t>>> states[2];
    for (int skip = 0; skip < 2; ++skip) {
      BuildOptions options;
      options.parallel = false;
      options.skip_finished_prefix = skip == 1;
      options.observer = [&](Phase, unsigned, const PointSet& points,
                             std::span<const std::uint32_t> tags) {
        states[skip].emplace_back(points, std::vector<std::uint32_t>(tags.begin(), tags.end()));
      };
      build_round_robin(input, options);
    }
    ASSERT_EQ(states[0].size(), states[1].size());
    for (std::size_t p = 0; p < states[0].size(); ++p) {
      ASSERT_EQ(states[0][p].first, states[1][p].first) << "phase " << p;
      ASSERT_EQ(states[0][p].second, states[1][p].second) << "phase " << p;
    }
  }
}

TEST(PointSet, PermuteGatherSubrange) {
  PointSet points = points_1d({0, 1, 2, 3, 4, 5});
  std::vector<std::uint32_t> from = {4, 2, 5, 3};
  points.permute_gather(from, 2);
  EXPECT_EQ(column(points, 0), (std::vector<Scalar>{0, 1, 4, 2, 5, 3}));
  EXPECT_EQ(points.payload(2), 4u);
  EXPECT_EQ(points.payload(5), 3u);
}

TEST(PointSet, RejectsBadShapes) {
  EXPECT_THROW(PointSet(0), InvalidArgument);
  EXPECT_THROW(PointSet(257), InvalidArgument);
  EXPECT_THROW(PointSet(2, {1, 2, 3}), InvalidArgument);
  PointSet p(2);
  const Scalar three[] = {1, 2, 3};
  EXPECT_THROW(p.push_back(three), InvalidArgument);
}
