// lbkd: build and query left-balanced k-d trees from CSV point files.

#include <CLI11.hpp>
#include <iostream>
#include <new>

#include "lbkd/commands.hpp"
#include "lbkd/error.hpp"

namespace {

CLI::Validator split_mode() { return CLI::IsMember({"round-robin", "widest"}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-balanced k-d tree builder"};
  app.require_subcommand(1);

  lbkd::cli::BuildArgs build_args;
  std::string build_in, build_out, build_mode = "round-robin";
  auto* build = app.add_subcommand("build", "Build a tree from a point CSV");
  build->add_option("--input", build_in, "Point CSV, one point per line")->required();
  build->add_option("--dims", build_args.dims, "Dimensionality k")
      ->required()
      ->check(CLI::Range(1u, 256u));
  build->add_option("--mode", build_mode, "round-robin or widest")->check(split_mode());
  build->add_option("--output", build_out, "Tree CSV to write")->required();
  build->add_flag("--payload", build_args.payload, "Input rows carry a trailing payload column");
  build->add_flag("--skip-prefix", build_args.skip_prefix,
                  "Sort only the unfinished suffix in each iteration");

  lbkd::cli::QueryArgs query_args;
  std::string tree_path;
  auto* query = app.add_subcommand("query", "Query a tree file");
  query->add_option("--tree", tree_path, "Tree CSV written by build")->required();
  query->add_option("--point", query_args.point, "Query point, e.g. 0.5,0.25")->required();
  auto* knn_opt = query->add_option("--knn", query_args.knn, "Number of nearest neighbours")
                      ->check(CLI::PositiveNumber);
  auto* radius_opt = query->add_option("--radius", query_args.radius, "Search radius")
                         ->check(CLI::NonNegativeNumber);
  knn_opt->excludes(radius_opt);
  query->require_option(2, 3);

  lbkd::cli::BenchArgs bench_args;
  std::string bench_mode = "round-robin";
  auto* bench = app.add_subcommand("bench", "Time builds over uniform random points");
  bench->add_option("--n", bench_args.n, "Point count");
  bench->add_option("--dims", bench_args.dims, "Dimensionality k")->check(CLI::Range(1u, 256u));
  bench->add_option("--mode", bench_mode, "round-robin or widest")->check(split_mode());
  bench->add_option("--seed", bench_args.seed, "mt19937_64 seed");
  bench->add_option("--reps", bench_args.reps, "Repetitions to average")
      ->check(CLI::PositiveNumber);

  std::string fixture_path;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in verification suites");
  selftest->add_option("--fixtures", fixture_path, "JSON walkthrough tables to check instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      build_args.mode = lbkd::parse_split_rule(build_mode);
      lbkd::cli::build_files(build_in, build_out, build_args);
    } else if (*query) {
      lbkd::cli::query_file(tree_path, std::cout, query_args);
    } else if (*bench) {
      bench_args.mode = lbkd::parse_split_rule(bench_mode);
      lbkd::cli::bench(std::cout, bench_args);
    } else if (*selftest) {
      return lbkd::cli::selftest(std::cout, fixture_path) ? 0 : 1;
    }
  } catch (const std::bad_alloc&) {
    std::cerr << "lbkd: out of memory\n";
    return 3;
  } catch (const lbkd::Error& e) {
    std::cerr << "lbkd: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
