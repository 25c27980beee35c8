#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lbkd/tree_math.hpp"

namespace lbkd {

using Scalar = double;
using Payload = std::uint64_t;

/// Largest supported dimensionality; split dimensions are stored in one byte.
inline constexpr unsigned kMaxDims = 256;

/// N points of dimension k stored row-major, each with an opaque payload that
/// travels with the point through every reordering.
class PointSet {
 public:
  explicit PointSet(unsigned k = 1);

  /// Builds from row-major coordinates; payload i defaults to i.
  PointSet(unsigned k, std::vector<Scalar> coords);
  PointSet(unsigned k, std::vector<Scalar> coords, std::vector<Payload> payloads);

  unsigned dims() const { return k_; }
  std::size_t size() const { return payloads_.size(); }
  bool empty() const { return payloads_.empty(); }

  std::span<const Scalar> point(std::size_t i) const {
    return {coords_.data() + i * k_, k_};
  }
  std::span<Scalar> point(std::size_t i) { return {coords_.data() + i * k_, k_}; }
  Scalar coord(std::size_t i, unsigned d) const { return coords_[i * k_ + d]; }
  Payload payload(std::size_t i) const { return payloads_[i]; }

  void push_back(std::span<const Scalar> coords, Payload payload);
  void push_back(std::span<const Scalar> coords) { push_back(coords, size()); }
  void reserve(std::size_t n);

  std::span<const Scalar> coords() const { return coords_; }
  std::span<const Payload> payloads() const { return payloads_; }

  void swap_points(std::size_t a, std::size_t b);

  /// Reorders positions [offset, offset + from.size()) so that new position
  /// offset + i holds old point from[i]. `from` must permute that range; it is
  /// consumed as scratch.
  void permute_gather(std::span<std::uint32_t> from, std::size_t offset = 0);

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  unsigned k_;
  std::vector<Scalar> coords_;
  std::vector<Payload> payloads_;
};

/// Throws NonFiniteCoordinate if any coordinate is NaN or infinite, and
/// CapacityExceeded if the set cannot be indexed by 32-bit tags.
void validate_for_build(const PointSet& points);

}  // namespace lbkd
