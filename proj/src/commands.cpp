#include "lbkd/commands.hpp"

#include <fstream>
#include <sstream>
#include <ostream>

#include "lbkd/bench.hpp"
#include "lbkd/builder.hpp"
#include "lbkd/csv_io.hpp"
#include "lbkd/error.hpp"
#include "lbkd/queries.hpp"
#include "lbkd/selftest.hpp"
#include "lbkd/widest_split.hpp"

namespace lbkd::cli {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void build(std::istream& in, std::ostream& out, const BuildArgs& args) {
  PointSet points = read_points_csv(in, args.dims, args.payload);
  BuildOptions options;
  options.skip_finished_prefix = args.skip_prefix;
  const KdTree tree = args.mode == SplitRule::round_robin
                          ? build_round_robin(std::move(points), options)
                          : build_widest(std::move(points), options);
  write_tree_csv(out, tree, args.payload);
}

void build_files(const std::string& input, const std::string& output, const BuildArgs& args) {
  auto in = open_in(input);
  std::ostringstream buffer;
  build(in, buffer, args);
  auto out = open_out(output);
  out << buffer.str();
  if (!out.flush()) throw Error("failed writing '" + output + "'");
}

void query(std::istream& tree_file, std::ostream& out, const QueryArgs& args) {
  if (args.knn.has_value() == args.radius.has_value()) {
    throw InvalidArgument("exactly one of --knn and --radius is required");
  }
  const KdTree tree = read_tree_csv(tree_file);
  const auto point = parse_tuple(args.point);
  if (!tree.empty() && point.size() != tree.dims()) {
    throw InvalidArgument("query point has " + std::to_string(point.size()) +
                          " coordinates, tree has k = " + std::to_string(tree.dims()));
  }
  if (args.knn) {
    for (const auto& hit : knn(tree, point, *args.knn)) {
      out << hit.index << ',' << format_scalar(hit.dist2) << '\n';
    }
  } else {
    for (const NodeIndex s : radius_query(tree, point, *args.radius)) {
      out << s << ',' << format_scalar(squared_distance(point, tree.points.point(s))) << '\n';
    }
  }
}

void query_file(const std::string& tree_path, std::ostream& out, const QueryArgs& args) {
  auto in = open_in(tree_path);
  query(in, out, args);
}

void bench(std::ostream& out, const BenchArgs& args) {
  out << to_json_line(run_bench(args.n, args.dims, args.mode, args.seed, args.reps)) << '\n';
}

bool selftest(std::ostream& out, const std::string& fixture_path) {
  verify::SelftestOptions options;
  std::vector<verify::StateTable> loaded;
  if (!fixture_path.empty()) {
    auto in = open_in(fixture_path);
    loaded = verify::load_fixtures_json(in);
    options.fixtures = loaded;
  }
  return verify::run_selftest(out, options);
}

}  // namespace lbkd::cli
