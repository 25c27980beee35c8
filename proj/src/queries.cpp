#include "lbkd/queries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lbkd/error.hpp"
#include "lbkd/tree_math.hpp"

namespace lbkd {

Scalar squared_distance(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar sum = 0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const Scalar diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

namespace {

void check_query(const KdTree& tree, std::span<const Scalar> query) {
  if (query.size() != tree.dims()) {
    throw InvalidArgument("query has " + std::to_string(query.size()) +
                          " coordinates, tree has k = " + std::to_string(tree.dims()));
  }
  if (!std::all_of(query.begin(), query.end(), [](Scalar v) { return std::isfinite(v); })) {
    throw NonFiniteCoordinate("query point has a non-finite coordinate");
  }
}

// Depth-first walk, near side first. A far subtree is entered only if its
// plane distance does not exceed bound(). Every root-to-leaf path holds at most
// one pending far child per level, so 32 slots always suffice.
template <class Bound, class Visit>
void traverse(const KdTree& tree, std::span<const Scalar> query, bool prune, Bound&& bound,
              Visit&& visit) {
  struct Pending {
    NodeIndex node;
    Scalar plane_dist2;
  };
  std::array<Pending, 32> stack;
  unsigned top = 0;
  const Count n = tree.size();
  NodeIndex s = 0;
  for (;;) {
    if (s < n) {
      const auto p = tree.points.point(s);
      visit(s, p);
      const unsigned dim = tree.split_dim(s);
      const Scalar diff = query[dim] - p[dim];
      const NodeIndex near = diff < 0 ? l_child(s) : r_child(s);
      const NodeIndex far = diff < 0 ? r_child(s) : l_child(s);
      if (far < n) stack[top++] = {far, diff * diff};
      s = near;
      continue;
    }
    for (;;) {
      if (top == 0) return;
      const Pending next = stack[--top];
      if (!prune || next.plane_dist2 <= bound()) {
        s = next.node;
        break;
      }
    }
  }
}

}  // namespace

std::vector<Neighbor> knn(const KdTree& tree, std::span<const Scalar> query, Count m,
                          const QueryOptions& options) {
  if (tree.empty()) throw InvalidArgument("knn on an empty tree");
  if (m == 0) throw InvalidArgument("knn needs m >= 1");
  check_query(tree, query);

  const Count want = std::min(m, tree.size());
  std::vector<Neighbor> best;  // max-heap under closer(): front is the worst kept
  best.reserve(want);
  const auto worst = [&] {
    return best.size() < want ? std::numeric_limits<Scalar>::infinity() : best.front().dist2;
  };
  traverse(tree, query, options.prune, worst, [&](NodeIndex s, std::span<const Scalar> p) {
    const Neighbor cand{s, squared_distance(query, p)};
    if (best.size() < want) {
      best.push_back(cand);
      std::push_heap(best.begin(), best.end(), closer);
    } else if (closer(cand, best.front())) {
      std::pop_heap(best.begin(), best.end(), closer);
      best.back() = cand;
      std::push_heap(best.begin(), best.end(), closer);
    }
  });
  std::sort_heap(best.begin(), best.end(), closer);
  return best;
}

std::vector<NodeIndex> radius_query(const KdTree& tree, std::span<const Scalar> query, Scalar r,
                                    const QueryOptions& options) {
  if (!(r >= 0)) throw InvalidArgument("radius must be >= 0");
  std::vector<NodeIndex> hits;
  if (tree.empty()) return hits;
  check_query(tree, query);
  const Scalar r2 = r * r;
  traverse(
      tree, query, options.prune, [r2] { return r2; },
      [&](NodeIndex s, std::span<const Scalar> p) {
        if (squared_distance(query, p) <= r2) hits.push_back(s);
      });
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace lbkd
