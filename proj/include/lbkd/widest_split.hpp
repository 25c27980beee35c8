#pragma once

// Split-widest-dimension construction.
//
// Same phase structure as the round-robin builder, but every subtree splits
// along the widest extent of its region. The chosen dimension rides in the low
// dim_bits(k) bits of each tag; since all points of one subtree carry the same
// dimension, ordering packed tags is ordering node indices. A child's region is
// recovered during the update phase by clipping the world box with the new
// split plane and then with every finalized ancestor's plane up to the root.

#include <cstdint>
#include <span>
#include <vector>

#include "lbkd/builder.hpp"
#include "lbkd/kd_tree.hpp"
#include "lbkd/point_set.hpp"

namespace lbkd {

/// Closed axis-aligned box.
struct Aabb {
  std::vector<Scalar> lo;
  std::vector<Scalar> hi;

  unsigned dims() const { return static_cast<unsigned>(lo.size()); }
  bool contains(std::span<const Scalar> p) const;
  bool contains(const Aabb& other) const;

  friend bool operator==(const Aabb&, const Aabb&) = default;
};

/// Component-wise min/max over all points. Throws InvalidArgument when empty.
Aabb world_bounds(const PointSet& points);

/// argmax of hi[d] - lo[d]; ties go to the lowest d.
unsigned widest_dim(const Aabb& box);

/// ceil(log2 k): bits reserved for the split dimension in a tag.
constexpr unsigned dim_bits(unsigned k) {
  unsigned bits = 0;
  while ((1u << bits) < k) ++bits;
  return bits;
}

struct PackedTag {
  NodeIndex node = 0;
  unsigned dim = 0;

  friend constexpr bool operator==(const PackedTag&, const PackedTag&) = default;
};

/// Packs (node, dim) into one 32-bit tag, dim in the low bits.
class TagCodec {
 public:
  explicit constexpr TagCodec(unsigned k) : bits_(dim_bits(k)) {}

  constexpr unsigned bits() const { return bits_; }
  constexpr std::uint32_t pack(NodeIndex node, unsigned dim) const {
    return (node << bits_) | dim;
  }
  constexpr PackedTag unpack(std::uint32_t tag) const { return {node_of(tag), dim_of(tag)}; }
  constexpr NodeIndex node_of(std::uint32_t tag) const { return tag >> bits_; }
  constexpr unsigned dim_of(std::uint32_t tag) const { return tag & ((1u << bits_) - 1u); }

  /// True if n nodes fit: n * 2^bits < 2^31.
  constexpr bool fits(std::uint64_t n) const { return (n << bits_) < (std::uint64_t{1} << 31); }

 private:
  unsigned bits_;
};

/// Region of `child` (a child of parent.node). Starts from `world`, clips it
/// with the parent's plane (dimension parent.dim at split_coord), then walks
/// from parent.node to the root clipping with each ancestor a's plane
/// (split_dims[a] at finalized.coord(a, .)). Writes into `out`.
void subtree_bounds(NodeIndex child, Scalar split_coord, PackedTag parent,
                    const PointSet& finalized, std::span<const std::uint8_t> split_dims,
                    const Aabb& world, Aabb& out);

Aabb subtree_bounds(NodeIndex child, Scalar split_coord, PackedTag parent,
                    const PointSet& finalized, std::span<const std::uint8_t> split_dims,
                    const Aabb& world);

/// Builds a widest-split tree with split_dims populated. Throws
/// NonFiniteCoordinate, or CapacityExceeded when N does not fit the tag bits.
KdTree build_widest(PointSet points, const BuildOptions& options = {});

}  // namespace lbkd
