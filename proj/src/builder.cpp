#include "lbkd/builder.hpp"

#include <algorithm>
#include <cassert>

#include "lbkd/tree_math.hpp"
#include "parallel.hpp"
#include "tag_sort.hpp"

namespace lbkd {

namespace {

void notify(const BuildOptions& options, Phase phase, unsigned iteration, const PointSet& points,
            std::span<const std::uint32_t> tags) {
  if (options.observer) options.observer(phase, iteration, points, tags);
}

void run_sort(detail::TagSorter& sorter, PointSet& points, std::span<std::uint32_t> tags,
              unsigned iteration, const BuildOptions& options) {
  const auto n = static_cast<Count>(tags.size());
  if (n == 0) return;
  const unsigned big_l = num_levels(n);
  // In the last iteration every tag is a distinct final index.
  const bool tag_only = iteration + 1 >= big_l;
  const unsigned dim = iteration % points.dims();
  sorter.run(points, tags, detail::sort_begin(iteration, options.skip_finished_prefix), tag_only, options.parallel,
             [&](std::uint32_t i, std::uint32_t) { return points.coord(i, dim); });
}

}  // namespace

std::vector<std::uint32_t> init_tags(Count n) { return std::vector<std::uint32_t>(n, 0u); }

void sort_phase(PointSet& points, std::span<std::uint32_t> tags, unsigned iteration,
                const BuildOptions& options) {
  detail::TagSorter sorter;
  run_sort(sorter, points, tags, iteration, options);
}

void update_tags_phase(std::span<std::uint32_t> tags, unsigned iteration,
                       const BuildOptions& options) {
  const auto n = static_cast<Count>(tags.size());
  if (n == 0) return;
  const Count done = full_tree_size(iteration);
  detail::for_each_chunk(done, n, options.parallel, [&](std::uint32_t b, std::uint32_t e) {
    for (std::uint32_t i = b; i < e; ++i) {
      const NodeIndex s = tags[i];
      assert(s < n && level(s) == iteration);
      const Count pivot = pivot_pos(s, n);
      if (i < pivot) {
        tags[i] = l_child(s);
      } else if (i > pivot) {
        tags[i] = r_child(s);
      }
    }
  });
}

KdTree build_round_robin(PointSet points, const BuildOptions& options) {
  validate_for_build(points);
  const auto n = static_cast<Count>(points.size());
  KdTree tree{TreeShape::of(n, points.dims()), std::move(points), {}};
  BuildStats stats;
  if (n > 0) {
    auto tags = init_tags(n);
    stats.tag_entries = tags.size();
    stats.tag_bytes = tags.size() * sizeof(std::uint32_t);
    notify(options, Phase::init, 0, tree.points, tags);

    if (n > 1) {
      detail::TagSorter sorter;
      const unsigned big_l = tree.shape.levels;
      for (unsigned l = 0; l + 1 < big_l; ++l) {
        run_sort(sorter, tree.points, tags, l, options);
        ++stats.sort_phases;
        notify(options, Phase::sort, l, tree.points, tags);
        update_tags_phase(tags, l, options);
        ++stats.update_phases;
        notify(options, Phase::update, l, tree.points, tags);
      }
      run_sort(sorter, tree.points, tags, big_l - 1, options);
      ++stats.sort_phases;
      notify(options, Phase::sort, big_l - 1, tree.points, tags);
    }
  }
  if (options.stats != nullptr) *options.stats = stats;
  return tree;
}

}  // namespace lbkd
