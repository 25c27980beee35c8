#pragma once

#include <algorithm>
#include <cstdint>

#if defined(LBKD_USE_TBB)
#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_sort.h>
#endif

namespace lbkd::detail {

inline constexpr std::uint32_t kGrain = 4096;

/// Calls fn(chunk_begin, chunk_end) over disjoint chunks covering [begin, end).
/// Chunks may run concurrently; the call returns after all of them finish.
template <class Fn>
void for_each_chunk(std::uint32_t begin, std::uint32_t end, bool parallel, Fn&& fn) {
  if (begin >= end) return;
#if defined(LBKD_USE_TBB)
  if (parallel && end - begin > kGrain) {
    tbb::parallel_for(tbb::blocked_range<std::uint32_t>(begin, end, kGrain),
                      [&](const tbb::blocked_range<std::uint32_t>& r) { fn(r.begin(), r.end()); });
    return;
  }
#else
  (void)parallel;
#endif
  fn(begin, end);
}

template <class It, class Less>
void sort(It first, It last, Less less, bool parallel) {
#if defined(LBKD_USE_TBB)
  if (parallel && last - first > static_cast<std::ptrdiff_t>(kGrain)) {
    tbb::parallel_sort(first, last, less);
    return;
  }
#else
  (void)parallel;
#endif
  std::sort(first, last, less);
}

}  // namespace lbkd::detail
