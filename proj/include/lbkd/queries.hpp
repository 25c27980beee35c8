#pragma once

#include <span>
#include <vector>

#include "lbkd/kd_tree.hpp"

namespace lbkd {

struct Neighbor {
  NodeIndex index = 0;
  Scalar dist2 = 0;  ///< squared Euclidean distance

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Orders by (dist2, index).
constexpr bool closer(const Neighbor& a, const Neighbor& b) {
  return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
}

struct QueryOptions {
  /// Skip far subtrees whose splitting plane is out of range. Turning this
  /// off visits every node and must not change any result.
  bool prune = true;
};

/// The min(m, N) nearest nodes to `query`, ascending by (dist2, index).
/// Throws InvalidArgument for an empty tree, m = 0 or a dimension mismatch.
std::vector<Neighbor> knn(const KdTree& tree, std::span<const Scalar> query, Count m,
                          const QueryOptions& options = {});

/// Indices of all nodes within distance r of `query` (dist2 <= r*r), ascending.
std::vector<NodeIndex> radius_query(const KdTree& tree, std::span<const Scalar> query, Scalar r,
                                    const QueryOptions& options = {});

Scalar squared_distance(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace lbkd
