#include "lbkd/walkthrough.hpp"

#include <algorithm>

#include "lbkd/builder.hpp"
#include "lbkd/error.hpp"

namespace lbkd::verify {

PointSet walkthrough_input() {
  return PointSet(2, {10, 15, 46, 63, 68, 21, 40, 33, 25, 54, 15, 43, 44, 58, 45, 40, 62, 69, 53, 67});
}

std::span<const StateTable> walkthrough_tables() {
  static const std::vector<StateTable> tables = {
      {"initial",
       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {10, 46, 68, 40, 25, 15, 44, 45, 62, 53},
       {15, 63, 21, 33, 54, 43, 58, 40, 69, 67}},
      {"after step 0 sort",
       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {10, 15, 25, 40, 44, 45, 46, 53, 62, 68},
       {15, 43, 54, 33, 58, 40, 63, 67, 69, 21}},
      {"after step 0 tags updated",
       {1, 1, 1, 1, 1, 1, 0, 2, 2, 2},
       {10, 15, 25, 40, 44, 45, 46, 53, 62, 68},
       {15, 43, 54, 33, 58, 40, 63, 67, 69, 21}},
      {"after step 1 sort",
       {0, 1, 1, 1, 1, 1, 1, 2, 2, 2},
       {46, 10, 40, 45, 15, 25, 44, 68, 53, 62},
       {63, 15, 33, 40, 43, 54, 58, 21, 67, 69}},
      {"after step 1 tags updated",
       {0, 3, 3, 3, 1, 4, 4, 5, 2, 6},
       {46, 10, 40, 45, 15, 25, 44, 68, 53, 62},
       {63, 15, 33, 40, 43, 54, 58, 21, 67, 69}},
      {"after step 2 sort",
       {0, 1, 2, 3, 3, 3, 4, 4, 5, 6},
       {46, 15, 53, 10, 40, 45, 25, 44, 68, 62},
       {63, 43, 67, 15, 33, 40, 54, 58, 21, 69}},
      {"after step 2 tags updated",
       {0, 1, 2, 7, 3, 8, 9, 4, 5, 6},
       {46, 15, 53, 10, 40, 45, 25, 44, 68, 62},
       {63, 43, 67, 15, 33, 40, 54, 58, 21, 69}},
      {"after final sort",
       {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
       {46, 15, 53, 40, 44, 68, 62, 10, 45, 25},
       {63, 43, 67, 33, 58, 21, 69, 15, 40, 54}},
  };
  return tables;
}

std::vector<StateTable> record_walkthrough(const PointSet& input) {
  if (input.dims() != 2) throw InvalidArgument("walkthrough recording needs 2-d points");
  std::vector<StateTable> recorded;
  BuildOptions options;
  options.parallel = false;
  unsigned last_sort = 0;
  options.observer = [&](Phase phase, unsigned iteration, const PointSet& points,
                         std::span<const std::uint32_t> tags) {
    StateTable table;
    switch (phase) {
      case Phase::init:
        table.name = "initial";
        break;
      case Phase::sort:
        table.name = "after step " + std::to_string(iteration) + " sort";
        last_sort = static_cast<unsigned>(recorded.size());
        break;
      case Phase::update:
        table.name = "after step " + std::to_string(iteration) + " tags updated";
        break;
    }
    table.tags.assign(tags.begin(), tags.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
      table.x.push_back(points.coord(i, 0));
      table.y.push_back(points.coord(i, 1));
    }
    recorded.push_back(std::move(table));
  };
  build_round_robin(input, options);
  if (recorded.size() > 1) recorded[last_sort].name = "after final sort";
  return recorded;
}

std::string first_mismatch(std::span<const StateTable> expected,
                           std::span<const StateTable> recorded) {
  const std::size_t common = std::min(expected.size(), recorded.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (!(expected[i] == recorded[i])) return expected[i].name;
  }
  if (expected.size() > common) return expected[common].name;
  if (recorded.size() > common) return recorded[common].name;
  return {};
}

}  // namespace lbkd::verify
