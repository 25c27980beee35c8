#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lbkd/builder.hpp"
#include "lbkd/error.hpp"
#include "lbkd/random_points.hpp"
#include "lbkd/verify.hpp"
#include "lbkd/walkthrough.hpp"
#include "lbkd/widest_split.hpp"
#include "test_support.hpp"

using namespace lbkd;
using lbkd::testing::sorted_rows;

TEST(WorldBounds, Examples) {
  const Aabb box = world_bounds(verify::walkthrough_input());
  EXPECT_EQ(box.lo, (std::vector<Scalar>{10, 15}));
  EXPECT_EQ(box.hi, (std::vector<Scalar>{68, 69}));

  const Aabb single = world_bounds(PointSet(3, {1, -2, 3}));
  EXPECT_EQ(single.lo, single.hi);
  EXPECT_EQ(single.lo, (std::vector<Scalar>{1, -2, 3}));

  const Aabb two = world_bounds(PointSet(2, {0, 0, 1, 2}));
  EXPECT_EQ(two, (Aabb{{0, 0}, {1, 2}}));
}

TEST(WorldBounds, EmptyIsContractViolation) {
  EXPECT_THROW(world_bounds(PointSet(2)), InvalidArgument);
}

TEST(WidestDim, Examples) {
  EXPECT_EQ(widest_dim(Aabb{{10, 15}, {68, 69}}), 0u);
  EXPECT_EQ(widest_dim(Aabb{{0, 0}, {1, 1}}), 0u);
  EXPECT_EQ(widest_dim(Aabb{{0, 0, 0}, {1, 3, 2}}), 1u);
  EXPECT_EQ(widest_dim(Aabb{{5, 5, 5}, {5, 5, 5}}), 0u);
  EXPECT_EQ(widest_dim(Aabb{{0, 0, 0}, {1, 2, 2}}), 1u);
}

TEST(TagCodec, BitWidths) {
  EXPECT_EQ(dim_bits(1), 0u);
  EXPECT_EQ(dim_bits(2), 1u);
  EXPECT_EQ(dim_bits(3), 2u);
  EXPECT_EQ(dim_bits(4), 2u);
  EXPECT_EQ(dim_bits(5), 3u);
  EXPECT_EQ(dim_bits(256), 8u);
}

TEST(TagCodec, Capacity) {
  EXPECT_TRUE(TagCodec(1).fits(kMaxTreeSize));
  EXPECT_FALSE(TagCodec(2).fits(std::uint64_t{1} << 30));
  EXPECT_TRUE(TagCodec(2).fits((std::uint64_t{1} << 30) - 1));
  EXPECT_FALSE(TagCodec(256).fits(std::uint64_t{1} << 23));
  EXPECT_TRUE(TagCodec(256).fits((std::uint64_t{1} << 23) - 1));
}

TEST(TagCodecProperty, PackRoundTripAndOrder) {
  Rng rng(11);
  for (unsigned k = 1; k <= 256; k += 1 + static_cast<unsigned>(rng.below(7))) {
    const TagCodec codec(k);
    const std::uint64_t limit = (std::uint64_t{1} << 31) >> codec.bits();
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<NodeIndex>(rng.below(limit));
      const auto b = static_cast<NodeIndex>(rng.below(limit));
      const auto da = static_cast<unsigned>(rng.below(k));
      const auto db = static_cast<unsigned>(rng.below(k));
      ASSERT_EQ(codec.unpack(codec.pack(a, da)), (PackedTag{a, da}));
      if (a != b) ASSERT_EQ(codec.pack(a, da) < codec.pack(b, db), a < b);
    }
  }
}

TEST(SubtreeBounds, RootChildrenOfWalkthrough) {
  const PointSet finalized = build_round_robin(verify::walkthrough_input()).points;
  const Aabb world{{10, 15}, {68, 69}};
  const std::vector<std::uint8_t> dims(10, 0);
  const PackedTag root{0, 0};
  EXPECT_EQ(subtree_bounds(l_child(0), 46, root, finalized, dims, world),
            (Aabb{{10, 15}, {46, 69}}));
  EXPECT_EQ(subtree_bounds(r_child(0), 46, root, finalized, dims, world),
            (Aabb{{46, 15}, {68, 69}}));
}

TEST(SubtreeBounds, WalksAncestorPlanes) {
  // Round-robin walkthrough tree: root splits x at 46, node 1 splits y at 43.
  const PointSet finalized = build_round_robin(verify::walkthrough_input()).points;
  const Aabb world{{10, 15}, {68, 69}};
  const std::vector<std::uint8_t> dims = {0, 1, 1, 0, 0, 0, 0, 0, 0, 0};
  // Children of node 3 (x = 40), which is the left child of node 1.
  EXPECT_EQ(subtree_bounds(l_child(3), 40, PackedTag{3, 0}, finalized, dims, world),
            (Aabb{{10, 15}, {40, 43}}));
  EXPECT_EQ(subtree_bounds(r_child(3), 40, PackedTag{3, 0}, finalized, dims, world),
            (Aabb{{40, 15}, {46, 43}}));
}

TEST(BuildWidest, OneDimensionMatchesRoundRobin) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Count>(rng.below(600));
    const PointSet input = duplicate_heavy_points(n, 1, 50, rng);
    BuildOptions serial;
    serial.parallel = false;
    const KdTree widest = build_widest(input, serial);
    const KdTree rr = build_round_robin(input, serial);
    ASSERT_EQ(widest.points, rr.points);
    ASSERT_EQ(widest.split_dims, std::vector<std::uint8_t>(n, 0));
  }
}

TEST(BuildWidest, SinglePoint) {
  const KdTree tree = build_widest(PointSet(3, {1, 2, 3}));
  EXPECT_EQ(tree.split_dims, std::vector<std::uint8_t>{0});
  EXPECT_EQ(tree.rule(), SplitRule::widest);
}

TEST(BuildWidest, Empty) {
  const KdTree tree = build_widest(PointSet(2));
  EXPECT_TRUE(tree.empty());
  EXPECT_TRUE(tree.split_dims.empty());
}

TEST(BuildWidest, RejectsNonFinite) {
  EXPECT_THROW(build_widest(PointSet(2, {0, 1, std::nan(""), 2})), NonFiniteCoordinate);
}

TEST(BuildWidest, WalkthroughIsValid) {
  const KdTree tree = build_widest(verify::walkthrough_input());
  EXPECT_TRUE(verify::check_valid(tree).ok());
  EXPECT_EQ(tree.split_dims[0], 0u);
  EXPECT_EQ(tree.points.coord(0, 0), 46);
}

TEST(BuildWidest, PhaseCountsAndTagStorage) {
  BuildStats stats;
  BuildOptions options;
  options.stats = &stats;
  build_widest(uniform_points(777, 4, 9), options);
  EXPECT_EQ(stats.sort_phases, num_levels(777));
  EXPECT_EQ(stats.update_phases, num_levels(777) - 1);
  EXPECT_EQ(stats.tag_entries, 777u);
}

TEST(BuildWidest, RecordedDimsMatchBruteBoxes) {
  Rng rng(256);
  for (int trial = 0; trial < 5; ++trial) {
    const KdTree tree = build_widest(uniform_points(256, 3, rng.next()));
    const auto boxes = verify::brute_subtree_boxes(tree);
    for (NodeIndex s = 0; s < 256; ++s) {
      ASSERT_EQ(tree.split_dims[s], widest_dim(boxes[s])) << "node " << s;
    }
  }
}

TEST(BuildWidestProperty, ValidPermutationEqualToReference) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(1500));
    const auto k = static_cast<unsigned>(2 + rng.below(4));
    const PointSet dup = duplicate_heavy_points(n, k, 3, rng);
    const KdTree tree = build_widest(dup);
    ASSERT_TRUE(verify::check_valid(tree).ok()) << verify::check_valid(tree).describe();
    ASSERT_EQ(sorted_rows(tree.points), sorted_rows(dup));

    const PointSet distinct = distinct_points(n, k, rng);
    const KdTree a = build_widest(distinct);
    const KdTree b = verify::reference_build(distinct, SplitRule::widest);
    ASSERT_EQ(a.points, b.points);
    ASSERT_EQ(a.split_dims, b.split_dims);
  }
}

// All points tagged with one node carry the same dimension bits.
TEST(BuildWidestProperty, DimBitsConsistentPerNode) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Count>(2 + rng.below(800));
    const auto k = static_cast<unsigned>(2 + rng.below(5));
    const TagCodec codec(k);
    BuildOptions options;
    options.observer = [&](Phase, unsigned, const PointSet&, std::span<const std::uint32_t> tags) {
      std::map<NodeIndex, unsigned> seen;
      for (const auto t : tags) {
        const auto [it, fresh] = seen.emplace(codec.node_of(t), codec.dim_of(t));
        ASSERT_EQ(it->second, codec.dim_of(t));
        ASSERT_LT(codec.dim_of(t), k);
      }
    };
    build_widest(uniform_points(n, k, rng.next()), options);
  }
}

TEST(BuildWidestProperty, BoxesNestAndContainTheirPoints) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Count>(1 + rng.below(1000));
    const auto k = static_cast<unsigned>(2 + rng.below(3));
    const KdTree tree = build_widest(trial % 2 ? uniform_points(n, k, rng.next())
                                               : duplicate_heavy_points(n, k, 3, rng));
    const auto boxes = verify::brute_subtree_boxes(tree);
    for (NodeIndex s = 0; s < n; ++s) {
      if (s > 0) ASSERT_TRUE(boxes[parent(s)].contains(boxes[s]));
      // Every point of subtree s lies in box(s).
      std::vector<NodeIndex> stack = {s};
      while (!stack.empty()) {
        const NodeIndex d = stack.back();
        stack.pop_back();
        ASSERT_TRUE(boxes[s].contains(tree.points.point(d))) << "node " << s << " desc " << d;
        if (l_child(d) < n) stack.push_back(l_child(d));
        if (r_child(d) < n) stack.push_back(r_child(d));
      }
    }
  }
}

TEST(BuildWidest, ParallelAndSkipPrefixAgree) {
  Rng rng(4);
  const PointSet input = distinct_points(30000, 3, rng);
  const KdTree plain = build_widest(input);
  BuildOptions options;
  options.parallel = false;
  options.skip_finished_prefix = true;
  const KdTree other = build_widest(input, options);
  EXPECT_EQ(plain.points, other.points);
  EXPECT_EQ(plain.split_dims, other.split_dims);
}
