#include "lbkd/verify.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "lbkd/error.hpp"

namespace lbkd::verify {

namespace {

// Deliberately not tree_math::level.
unsigned level_by_loop(NodeIndex s) {
  unsigned l = 0;
  std::uint64_t first_of_next = 1;  // F(l + 1)
  while (s >= first_of_next) {
    ++l;
    first_of_next = 2 * first_of_next + 1;
  }
  return l;
}

Count first_on_level(unsigned l) { return static_cast<Count>((std::uint64_t{1} << l) - 1); }

Scalar dist2(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar sum = 0;
  for (std::size_t d = 0; d < a.size(); ++d) sum += (a[d] - b[d]) * (a[d] - b[d]);
  return sum;
}

}  // namespace

Count brute_subtree_size(NodeIndex s, Count n) {
  if (s >= n) return 0;
  return 1 + brute_subtree_size(2 * s + 1, n) + brute_subtree_size(2 * s + 2, n);
}

Count brute_segment_begin(NodeIndex s, Count n) {
  const Count first = first_on_level(level_by_loop(s));
  Count begin = first;
  for (NodeIndex i = first; i < s; ++i) begin += brute_subtree_size(i, n);
  return begin;
}

std::vector<Count> brute_subtree_sizes(Count n) {
  std::vector<Count> size(n, 0);
  for (Count i = n; i-- > 0;) {
    size[i] = 1;
    if (std::uint64_t{2} * i + 1 < n) size[i] += size[2 * i + 1];
    if (std::uint64_t{2} * i + 2 < n) size[i] += size[2 * i + 2];
  }
  return size;
}

std::vector<Count> brute_segment_begins(Count n) {
  const auto size = brute_subtree_sizes(n);
  std::vector<Count> begin(n, 0);
  for (unsigned l = 0; first_on_level(l) < n; ++l) {
    const Count first = first_on_level(l);
    const Count last = std::min<std::uint64_t>(first_on_level(l + 1), n);
    Count running = first;
    for (NodeIndex s = first; s < last; ++s) {
      begin[s] = running;
      running += size[s];
    }
  }
  return begin;
}

namespace {

class ReferenceBuilder {
 public:
  ReferenceBuilder(const PointSet& input, SplitRule rule)
      : input_(input), rule_(rule), n_(static_cast<Count>(input.size())), order_(n_), dims_(n_) {}

  KdTree run() {
    std::vector<std::uint32_t> items(n_);
    for (Count i = 0; i < n_; ++i) items[i] = i;
    Aabb box;
    if (n_ > 0) {
      box = {std::vector<Scalar>(input_.dims()), std::vector<Scalar>(input_.dims())};
      for (unsigned d = 0; d < input_.dims(); ++d) {
        box.lo[d] = box.hi[d] = input_.coord(0, d);
        for (Count i = 1; i < n_; ++i) {
          box.lo[d] = std::min(box.lo[d], input_.coord(i, d));
          box.hi[d] = std::max(box.hi[d], input_.coord(i, d));
        }
      }
    }
    build(0, items, box);

    PointSet out(input_.dims());
    out.reserve(n_);
    for (Count s = 0; s < n_; ++s) out.push_back(input_.point(order_[s]), input_.payload(order_[s]));
    KdTree tree{TreeShape::of(n_, input_.dims()), std::move(out), {}};
    if (rule_ == SplitRule::widest) tree.split_dims = std::move(dims_);
    return tree;
  }

 private:
  void build(NodeIndex s, std::span<std::uint32_t> items, const Aabb& box) {
    if (items.empty()) return;
    assert(items.size() == brute_subtree_size(s, n_));
    const unsigned dim =
        rule_ == SplitRule::round_robin ? level_by_loop(s) % input_.dims() : widest_dim(box);
    std::sort(items.begin(), items.end(), [&](std::uint32_t a, std::uint32_t b) {
      return input_.coord(a, dim) < input_.coord(b, dim);
    });
    const Count left = brute_subtree_size(2 * s + 1, n_);
    order_[s] = items[left];
    dims_[s] = static_cast<std::uint8_t>(dim);
    const Scalar plane = input_.coord(items[left], dim);

    Aabb left_box = box;
    left_box.hi[dim] = std::min(left_box.hi[dim], plane);
    build(2 * s + 1, items.first(left), left_box);
    Aabb right_box = box;
    right_box.lo[dim] = std::max(right_box.lo[dim], plane);
    build(2 * s + 2, items.subspan(left + 1), right_box);
  }

  const PointSet& input_;
  SplitRule rule_;
  Count n_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint8_t> dims_;
};

}  // namespace

KdTree reference_build(PointSet points, SplitRule rule) {
  validate_for_build(points);
  if (rule == SplitRule::widest && !TagCodec(points.dims()).fits(points.size())) {
    throw CapacityExceeded("point count does not fit 32-bit tags with dimension bits");
  }
  return ReferenceBuilder(points, rule).run();
}

std::string ValidityReport::describe() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << "node " << violation->node << " (dim " << violation->dim << ") violated by descendant "
     << violation->descendant;
  return os.str();
}

ValidityReport check_valid(const KdTree& tree) {
  const Count n = tree.size();
  for (NodeIndex s = 0; s < n; ++s) {
    const unsigned dim = tree.split_dim(s);
    const Scalar plane = tree.points.coord(s, dim);
    for (const bool left : {true, false}) {
      // Descendants of child c, one level at a time: [first, first + width).
      std::uint64_t first = left ? 2ull * s + 1 : 2ull * s + 2;
      std::uint64_t width = 1;
      while (first < n) {
        const std::uint64_t last = std::min<std::uint64_t>(first + width, n);
        for (std::uint64_t d = first; d < last; ++d) {
          const Scalar v = tree.points.coord(d, dim);
          if (left ? v > plane : v < plane) {
            return {Violation{s, static_cast<NodeIndex>(d), dim}};
          }
        }
        first = 2 * first + 1;
        width *= 2;
      }
    }
  }
  return {};
}

std::vector<Neighbor> brute_knn(const PointSet& points, std::span<const Scalar> query, Count m) {
  std::vector<Neighbor> all;
  all.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    all.push_back({static_cast<NodeIndex>(i), dist2(query, points.point(i))});
  }
  std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.dist2 != b.dist2 ? a.dist2 < b.dist2 : a.index < b.index;
  });
  all.resize(std::min<std::size_t>(m, all.size()));
  return all;
}

std::vector<NodeIndex> brute_radius(const PointSet& points, std::span<const Scalar> query,
                                    Scalar r) {
  std::vector<NodeIndex> hits;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (dist2(query, points.point(i)) <= r * r) hits.push_back(static_cast<NodeIndex>(i));
  }
  return hits;
}

std::vector<Aabb> brute_subtree_boxes(const KdTree& tree) {
  const Count n = tree.size();
  std::vector<Aabb> boxes(n);
  if (n == 0) return boxes;
  const unsigned k = tree.dims();
  Aabb& root = boxes[0];
  root.lo.assign(k, 0);
  root.hi.assign(k, 0);
  for (unsigned d = 0; d < k; ++d) {
    root.lo[d] = root.hi[d] = tree.points.coord(0, d);
    for (Count i = 1; i < n; ++i) {
      root.lo[d] = std::min(root.lo[d], tree.points.coord(i, d));
      root.hi[d] = std::max(root.hi[d], tree.points.coord(i, d));
    }
  }
  for (NodeIndex s = 1; s < n; ++s) {
    const NodeIndex up = (s - 1) / 2;
    const unsigned dim = tree.split_dim(up);
    const Scalar plane = tree.points.coord(up, dim);
    boxes[s] = boxes[up];
    if (s == 2 * up + 1) {
      boxes[s].hi[dim] = std::min(boxes[s].hi[dim], plane);
    } else {
      boxes[s].lo[dim] = std::max(boxes[s].lo[dim], plane);
    }
  }
  return boxes;
}

}  // namespace lbkd::verify
