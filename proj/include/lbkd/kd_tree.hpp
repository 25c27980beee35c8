#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lbkd/point_set.hpp"
#include "lbkd/tree_math.hpp"

namespace lbkd {

enum class SplitRule {
  round_robin,  ///< node s splits on level(s) mod k
  widest,       ///< node s splits on the widest extent of its region
};

std::string_view to_string(SplitRule rule);

/// Parses "round-robin" or "widest"; throws InvalidArgument otherwise.
SplitRule parse_split_rule(std::string_view text);

/// A left-balanced complete k-d tree: node s is points.point(s), its children
/// are 2s+1 and 2s+2. No pointers are stored.
struct KdTree {
  TreeShape shape;
  PointSet points;
  /// One entry per node for the widest rule; empty for round-robin.
  std::vector<std::uint8_t> split_dims;

  SplitRule rule() const { return split_dims.empty() ? SplitRule::round_robin : SplitRule::widest; }
  unsigned dims() const { return shape.k; }
  Count size() const { return shape.n; }
  bool empty() const { return shape.n == 0; }

  unsigned split_dim(NodeIndex s) const {
    return split_dims.empty() ? level(s) % shape.k : split_dims[s];
  }
};

}  // namespace lbkd
