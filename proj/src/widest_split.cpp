#include "lbkd/widest_split.hpp"

#include <algorithm>
#include <string>

#include "lbkd/error.hpp"
#include "lbkd/tree_math.hpp"
#include "parallel.hpp"
#include "tag_sort.hpp"

namespace lbkd {

bool Aabb::contains(std::span<const Scalar> p) const {
  for (unsigned d = 0; d < dims(); ++d) {
    if (p[d] < lo[d] || p[d] > hi[d]) return false;
  }
  return true;
}

bool Aabb::contains(const Aabb& other) const {
  for (unsigned d = 0; d < dims(); ++d) {
    if (other.lo[d] < lo[d] || other.hi[d] > hi[d]) return false;
  }
  return true;
}

Aabb world_bounds(const PointSet& points) {
  if (points.empty()) throw InvalidArgument("world_bounds of an empty point set");
  const auto first = points.point(0);
  Aabb box{{first.begin(), first.end()}, {first.begin(), first.end()}};
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto p = points.point(i);
    for (unsigned d = 0; d < points.dims(); ++d) {
      box.lo[d] = std::min(box.lo[d], p[d]);
      box.hi[d] = std::max(box.hi[d], p[d]);
    }
  }
  return box;
}

unsigned widest_dim(const Aabb& box) {
  unsigned best = 0;
  for (unsigned d = 1; d < box.dims(); ++d) {
    if (box.hi[d] - box.lo[d] > box.hi[best] - box.lo[best]) best = d;
  }
  return best;
}

namespace {

// Odd indices are left children.
void clip(Aabb& box, NodeIndex child, unsigned dim, Scalar plane) {
  if (child % 2 == 1) {
    box.hi[dim] = std::min(box.hi[dim], plane);
  } else {
    box.lo[dim] = std::max(box.lo[dim], plane);
  }
}

}  // namespace

void subtree_bounds(NodeIndex child, Scalar split_coord, PackedTag parent_tag,
                    const PointSet& finalized, std::span<const std::uint8_t> split_dims,
                    const Aabb& world, Aabb& out) {
  out.lo.assign(world.lo.begin(), world.lo.end());
  out.hi.assign(world.hi.begin(), world.hi.end());
  clip(out, child, parent_tag.dim, split_coord);
  for (NodeIndex a = parent_tag.node; a != 0;) {
    const NodeIndex up = parent(a);
    const unsigned dim = split_dims[up];
    clip(out, a, dim, finalized.coord(up, dim));
    a = up;
  }
}

Aabb subtree_bounds(NodeIndex child, Scalar split_coord, PackedTag parent_tag,
                    const PointSet& finalized, std::span<const std::uint8_t> split_dims,
                    const Aabb& world) {
  Aabb out;
  subtree_bounds(child, split_coord, parent_tag, finalized, split_dims, world, out);
  return out;
}

namespace {

void notify(const BuildOptions& options, Phase phase, unsigned iteration, const PointSet& points,
            std::span<const std::uint32_t> tags) {
  if (options.observer) options.observer(phase, iteration, points, tags);
}

}  // namespace

KdTree build_widest(PointSet points, const BuildOptions& options) {
  validate_for_build(points);
  const unsigned k = points.dims();
  const TagCodec codec(k);
  if (!codec.fits(points.size())) {
    throw CapacityExceeded(std::to_string(points.size()) + " points do not fit 32-bit tags with " +
                           std::to_string(codec.bits()) + " dimension bits");
  }
  const auto n = static_cast<Count>(points.size());
  KdTree tree{TreeShape::of(n, k), std::move(points), std::vector<std::uint8_t>(n, 0)};
  BuildStats stats;
  if (n == 0) {
    if (options.stats != nullptr) *options.stats = stats;
    return tree;
  }

  PointSet& pts = tree.points;
  const Aabb world = world_bounds(pts);
  std::vector<std::uint32_t> tags(n, codec.pack(0, widest_dim(world)));
  stats.tag_entries = tags.size();
  stats.tag_bytes = tags.size() * sizeof(std::uint32_t);
  notify(options, Phase::init, 0, pts, tags);

  const unsigned big_l = tree.shape.levels;
  if (n > 1) {
    detail::TagSorter sorter;
    const auto key_of = [&](std::uint32_t i, std::uint32_t tag) {
      return pts.coord(i, codec.dim_of(tag));
    };
    for (unsigned l = 0; l + 1 < big_l; ++l) {
      const Count done = full_tree_size(l);
      sorter.run(pts, tags, detail::sort_begin(l, options.skip_finished_prefix), false,
                 options.parallel, key_of);
      ++stats.sort_phases;
      notify(options, Phase::sort, l, pts, tags);

      detail::for_each_chunk(done, n, options.parallel, [&](std::uint32_t b, std::uint32_t e) {
        Aabb box;
        for (std::uint32_t i = b; i < e; ++i) {
          const PackedTag current = codec.unpack(tags[i]);
          const Count pivot = pivot_pos(current.node, n);
          if (i == pivot) {
            tree.split_dims[current.node] = static_cast<std::uint8_t>(current.dim);
            continue;
          }
          const NodeIndex child = i < pivot ? l_child(current.node) : r_child(current.node);
          subtree_bounds(child, pts.coord(pivot, current.dim), current, pts, tree.split_dims,
                         world, box);
          tags[i] = codec.pack(child, widest_dim(box));
        }
      });
      ++stats.update_phases;
      notify(options, Phase::update, l, pts, tags);
    }
    sorter.run(pts, tags, detail::sort_begin(big_l - 1, options.skip_finished_prefix), true,
               options.parallel, key_of);
    ++stats.sort_phases;
    notify(options, Phase::sort, big_l - 1, pts, tags);
  }

  // Nodes on the lowest level never pass through an update phase; their
  // dimension is the one their tag carried into the final sort.
  for (Count i = full_tree_size(big_l - 1); i < n; ++i) {
    tree.split_dims[i] = static_cast<std::uint8_t>(codec.dim_of(tags[i]));
  }
  if (options.stats != nullptr) *options.stats = stats;
  return tree;
}

}  // namespace lbkd
