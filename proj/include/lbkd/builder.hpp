#pragma once

// Round-robin tag-and-sort construction.
//
// Every point carries a 32-bit tag holding its level-l ancestor. Iteration l
// sorts the whole array by (tag, coordinate l mod k), after which each level-l
// subtree occupies one contiguous segment whose start and pivot follow from
// tree_math. The update phase then moves each tag one level down. After
// num_levels(N) sorts every tag is the point's final node index.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lbkd/kd_tree.hpp"
#include "lbkd/point_set.hpp"

namespace lbkd {

enum class Phase { init, sort, update };

/// Called after every phase with the current array and tags.
using PhaseObserver = std::function<void(Phase phase, unsigned iteration, const PointSet& points,
                                         std::span<const std::uint32_t> tags)>;

struct BuildStats {
  unsigned sort_phases = 0;
  unsigned update_phases = 0;
  /// Tag entries the builder allocated (the only storage beyond the points
  /// themselves, not counting the sort's scratch).
  std::size_t tag_entries = 0;
  std::size_t tag_bytes = 0;
};

struct BuildOptions {
  /// Sort only [F(l-1), N) in iteration l; that prefix is already final.
  bool skip_finished_prefix = false;
  /// Run sort and update phases on the TBB pool when available.
  bool parallel = true;
  PhaseObserver observer;
  BuildStats* stats = nullptr;
};

std::vector<std::uint32_t> init_tags(Count n);

/// Major key tag, minor key coordinate `dim`. A strict weak ordering.
constexpr bool less(std::uint32_t tag_a, std::span<const Scalar> a, std::uint32_t tag_b,
                    std::span<const Scalar> b, unsigned dim) {
  return tag_a < tag_b || (tag_a == tag_b && a[dim] < b[dim]);
}

/// Sorts points and tags together under less(., ., iteration mod k).
void sort_phase(PointSet& points, std::span<std::uint32_t> tags, unsigned iteration,
                const BuildOptions& options = {});

/// Refines every tag at index >= F(iteration) from its level-l ancestor to its
/// level-(l+1) ancestor. Expects the array in post-sort_phase(iteration) state.
void update_tags_phase(std::span<std::uint32_t> tags, unsigned iteration,
                       const BuildOptions& options = {});

/// Builds a round-robin tree. Throws NonFiniteCoordinate or CapacityExceeded.
KdTree build_round_robin(PointSet points, const BuildOptions& options = {});

}  // namespace lbkd
