#pragma once

// Independent oracles for the builders and queries. Everything here is
// deliberately naive: recursive or summation definitions, full scans and a
// top-down list-partitioning builder. None of it uses the O(1) index formulas.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbkd/kd_tree.hpp"
#include "lbkd/queries.hpp"
#include "lbkd/widest_split.hpp"

namespace lbkd::verify {

/// 1 + sizes of the existing children; 0 for s >= n.
Count brute_subtree_size(NodeIndex s, Count n);

/// F(level(s)) + sum of brute_subtree_size over the nodes left of s on its level.
Count brute_segment_begin(NodeIndex s, Count n);

/// brute_subtree_size for every node of an n-node tree, by bottom-up counting.
std::vector<Count> brute_subtree_sizes(Count n);

/// brute_segment_begin for every node, as running sums along each level.
std::vector<Count> brute_segment_begins(Count n);

/// Top-down recursive builder: sort the node's list by its split dimension,
/// take the element at offset brute_subtree_size(l_child) as the node, recurse.
KdTree reference_build(PointSet points, SplitRule rule);

struct Violation {
  NodeIndex node = 0;
  NodeIndex descendant = 0;
  unsigned dim = 0;
};

struct ValidityReport {
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
  std::string describe() const;
};

/// Checks every (node, descendant) pair against the node's splitting plane.
ValidityReport check_valid(const KdTree& tree);

/// Full scan sorted by (dist2, index); returns min(m, N) entries.
std::vector<Neighbor> brute_knn(const PointSet& points, std::span<const Scalar> query, Count m);

/// Full scan; ascending indices with dist2 <= r*r.
std::vector<NodeIndex> brute_radius(const PointSet& points, std::span<const Scalar> query,
                                    Scalar r);

/// Region of every node, by clipping the world box top-down at each stored plane.
std::vector<Aabb> brute_subtree_boxes(const KdTree& tree);

}  // namespace lbkd::verify
