#pragma once

// Shared sort phase of both builders: sorts (tag, point) pairs by tag, then by
// a per-point key coordinate. Keys are copied into compact records so the
// comparison never chases the point array; the resulting permutation is then
// applied to the points in place.

#include <cstdint>
#include <span>
#include <vector>

#include "lbkd/point_set.hpp"
#include "lbkd/tree_math.hpp"
#include "parallel.hpp"

namespace lbkd::detail {

struct SortRecord {
  Scalar key;
  std::uint32_t tag;
  std::uint32_t from;
};

inline bool record_less(const SortRecord& a, const SortRecord& b) {
  return a.tag < b.tag || (a.tag == b.tag && a.key < b.key);
}

/// First position the sort of `iteration` must touch. Level l-1 pivots still
/// sit mid-segment, so only the nodes above them are already in place.
inline Count sort_begin(unsigned iteration, bool skip_finished_prefix) {
  return skip_finished_prefix && iteration > 0 ? full_tree_size(iteration - 1) : 0;
}

/// Sort scratch reused across the iterations of one build.
class TagSorter {
 public:
  /// Sorts [begin, tags.size()) of (points, tags). key_of(i, tag) yields the
  /// minor key of element i; it is not called when tag_only is set.
  template <class KeyOf>
  void run(PointSet& points, std::span<std::uint32_t> tags, std::uint32_t begin, bool tag_only,
           bool parallel, KeyOf&& key_of) {
    const auto n = static_cast<std::uint32_t>(tags.size());
    if (begin >= n) return;
    const std::uint32_t len = n - begin;
    records_.resize(len);
    from_.resize(len);

    for_each_chunk(begin, n, parallel, [&](std::uint32_t b, std::uint32_t e) {
      for (std::uint32_t i = b; i < e; ++i) {
        records_[i - begin] = SortRecord{tag_only ? Scalar{0} : key_of(i, tags[i]), tags[i], i};
      }
    });
    detail::sort(records_.begin(), records_.end(), record_less, parallel);
    for_each_chunk(0, len, parallel, [&](std::uint32_t b, std::uint32_t e) {
      for (std::uint32_t r = b; r < e; ++r) {
        tags[begin + r] = records_[r].tag;
        from_[r] = records_[r].from;
      }
    });
    points.permute_gather(from_, begin);
  }

 private:
  std::vector<SortRecord> records_;
  std::vector<std::uint32_t> from_;
};

}  // namespace lbkd::detail
