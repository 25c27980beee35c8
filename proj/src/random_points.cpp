#include "lbkd/random_points.hpp"

#include <numeric>
#include <vector>

namespace lbkd {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

PointSet uniform_points(Count n, unsigned k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Scalar> coords(std::size_t{n} * k);
  for (auto& c : coords) c = rng.uniform01();
  return PointSet(k, std::move(coords));
}

PointSet distinct_points(Count n, unsigned k, Rng& rng) {
  std::vector<Scalar> coords(std::size_t{n} * k);
  std::vector<Count> column(n);
  for (unsigned d = 0; d < k; ++d) {
    std::iota(column.begin(), column.end(), Count{0});
    for (Count i = n; i > 1; --i) {
      std::swap(column[i - 1], column[rng.below(i)]);
    }
    for (Count i = 0; i < n; ++i) coords[std::size_t{i} * k + d] = column[i];
  }
  return PointSet(k, std::move(coords));
}

PointSet duplicate_heavy_points(Count n, unsigned k, unsigned alphabet, Rng& rng) {
  std::vector<Scalar> coords(std::size_t{n} * k);
  for (auto& c : coords) c = static_cast<Scalar>(rng.below(alphabet));
  return PointSet(k, std::move(coords));
}

}  // namespace lbkd
