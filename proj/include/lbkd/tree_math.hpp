#pragma once

// Index arithmetic over implicit left-balanced complete binary trees stored
// in level order (root = 0, children of i at 2i+1 and 2i+2).
//
// All functions are constexpr, allocation-free and branch-light. Counts are
// 32-bit; trees are limited to kMaxTreeSize nodes so 2i+2 never overflows.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>

namespace lbkd {

using NodeIndex = std::uint32_t;
using Count = std::uint32_t;

inline constexpr Count kMaxTreeSize = 0x7fffffffu;  // 2^31 - 1

/// Number of leading zero bits of a nonzero 32-bit value.
constexpr unsigned clz32(std::uint32_t x) {
  assert(x != 0);
  return static_cast<unsigned>(std::countl_zero(x));
}

constexpr NodeIndex parent(NodeIndex i) {
  assert(i >= 1 && "root has no parent");
  return (i - 1) / 2;
}

constexpr NodeIndex l_child(NodeIndex i) { return 2 * i + 1; }
constexpr NodeIndex r_child(NodeIndex i) { return 2 * i + 2; }

/// floor(log2(i+1)); the root is on level 0.
constexpr unsigned level(NodeIndex i) { return 31u - clz32(i + 1); }

/// Levels of a left-balanced complete tree with n >= 1 nodes.
constexpr unsigned num_levels(Count n) {
  assert(n >= 1);
  return 32u - clz32(n);
}

/// Size of a full tree with l levels, 2^l - 1.
constexpr Count full_tree_size(unsigned l) {
  assert(l <= 31);
  return (Count{1} << l) - 1;
}

/// First lowest-level child: the leftmost slot on level num_levels(n)-1 that
/// s would own in a full tree. Appends (L - level(s) - 1) one-bits to s.
constexpr NodeIndex fllc(NodeIndex s, Count n) {
  assert(s < n);
  const unsigned shift = num_levels(n) - level(s) - 1;
  return ~((~s) << shift);
}

/// Node count of the subtree rooted at s in the tree of n nodes.
constexpr Count subtree_size(NodeIndex s, Count n) {
  assert(s < n);
  const unsigned shift = num_levels(n) - level(s) - 1;
  const Count width = Count{1} << shift;
  const NodeIndex first = fllc(s, n);
  const Count lowest = first >= n ? 0 : std::min<Count>(n - first, width);
  return (width - 1) + lowest;
}

/// Nodes to the left of s on its own level.
constexpr Count num_left_siblings(NodeIndex s) {
  return s - full_tree_size(level(s));
}

/// Array index where the segment of points tagged s starts once the array is
/// sorted by (tag, coordinate) during the iteration for level(s).
constexpr Count segment_begin(NodeIndex s, Count n) {
  assert(s < n);
  const unsigned l = level(s);
  const unsigned big_l = num_levels(n);
  const unsigned shift = big_l - l - 1;
  const Count nls = num_left_siblings(s);
  const Count inner = nls * ((Count{1} << shift) - 1);
  const Count lowest =
      std::min<Count>(nls * (Count{1} << shift), n - full_tree_size(big_l - 1));
  return full_tree_size(l) + inner + lowest;
}

/// Index inside s's segment of the element that becomes node s: everything
/// before it belongs to the left subtree, everything after to the right.
constexpr Count pivot_pos(NodeIndex s, Count n) {
  const NodeIndex left = l_child(s);
  return segment_begin(s, n) + (left < n ? subtree_size(left, n) : 0);
}

/// (n, k, levels) of a tree over n points of dimension k.
struct TreeShape {
  Count n = 0;
  unsigned k = 1;
  unsigned levels = 0;

  static constexpr TreeShape of(Count n, unsigned k) {
    return TreeShape{n, k, n == 0 ? 0u : num_levels(n)};
  }

  friend constexpr bool operator==(const TreeShape&, const TreeShape&) = default;
};

}  // namespace lbkd
