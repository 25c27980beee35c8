#include "lbkd/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lbkd/error.hpp"

namespace lbkd {

namespace {

void check_dims(unsigned k) {
  if (k == 0 || k > kMaxDims) {
    throw InvalidArgument("dimensionality must be in [1, " + std::to_string(kMaxDims) +
                          "], got " + std::to_string(k));
  }
}

}  // namespace

PointSet::PointSet(unsigned k) : k_(k) { check_dims(k); }

PointSet::PointSet(unsigned k, std::vector<Scalar> coords) : k_(k), coords_(std::move(coords)) {
  check_dims(k);
  if (coords_.size() % k_ != 0) {
    throw InvalidArgument("coordinate count " + std::to_string(coords_.size()) +
                          " is not a multiple of k = " + std::to_string(k_));
  }
  payloads_.resize(coords_.size() / k_);
  for (std::size_t i = 0; i < payloads_.size(); ++i) payloads_[i] = i;
}

PointSet::PointSet(unsigned k, std::vector<Scalar> coords, std::vector<Payload> payloads)
    : k_(k), coords_(std::move(coords)), payloads_(std::move(payloads)) {
  check_dims(k);
  if (coords_.size() != payloads_.size() * k_) {
    throw InvalidArgument("expected " + std::to_string(payloads_.size() * k_) +
                          " coordinates for " + std::to_string(payloads_.size()) +
                          " payloads, got " + std::to_string(coords_.size()));
  }
}

void PointSet::push_back(std::span<const Scalar> coords, Payload payload) {
  if (coords.size() != k_) {
    throw InvalidArgument("point has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(k_));
  }
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  payloads_.push_back(payload);
}

void PointSet::reserve(std::size_t n) {
  coords_.reserve(n * k_);
  payloads_.reserve(n);
}

void PointSet::swap_points(std::size_t a, std::size_t b) {
  std::swap_ranges(coords_.begin() + a * k_, coords_.begin() + (a + 1) * k_,
                   coords_.begin() + b * k_);
  std::swap(payloads_[a], payloads_[b]);
}

void PointSet::permute_gather(std::span<std::uint32_t> from, std::size_t offset) {
  const auto base = static_cast<std::uint32_t>(offset);
  std::vector<Scalar> held(k_);
  for (std::uint32_t r = 0; r < from.size(); ++r) {
    const std::uint32_t start = base + r;
    if (from[r] == start) continue;
    std::copy_n(coords_.begin() + std::size_t{start} * k_, k_, held.begin());
    const Payload held_payload = payloads_[start];
    std::uint32_t j = start;
    for (;;) {
      const std::uint32_t src = from[j - base];
      from[j - base] = j;
      if (src == start) {
        std::copy(held.begin(), held.end(), coords_.begin() + std::size_t{j} * k_);
        payloads_[j] = held_payload;
        break;
      }
      std::copy_n(coords_.begin() + std::size_t{src} * k_, k_,
                  coords_.begin() + std::size_t{j} * k_);
      payloads_[j] = payloads_[src];
      j = src;
    }
  }
}

void validate_for_build(const PointSet& points) {
  if (points.size() > kMaxTreeSize) {
    throw CapacityExceeded("point count " + std::to_string(points.size()) +
                           " exceeds the 32-bit tag limit of " + std::to_string(kMaxTreeSize));
  }
  const auto coords = points.coords();
  const auto bad = std::find_if(coords.begin(), coords.end(),
                                [](Scalar v) { return !std::isfinite(v); });
  if (bad != coords.end()) {
    const auto flat = static_cast<std::size_t>(bad - coords.begin());
    throw NonFiniteCoordinate("non-finite coordinate at point " +
                              std::to_string(flat / points.dims()) + ", dimension " +
                              std::to_string(flat % points.dims()));
  }
}

}  // namespace lbkd
