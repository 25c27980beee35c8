#pragma once

// Implementations behind the `lbkd` command-line subcommands. Each returns
// normally on success and throws lbkd::Error on bad input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lbkd/kd_tree.hpp"

namespace lbkd::cli {

struct BuildArgs {
  unsigned dims = 0;
  SplitRule mode = SplitRule::round_robin;
  bool payload = false;  ///< input has a payload column; echoed to the output
  bool skip_prefix = false;
};

/// Reads a point file from `in`, builds, and writes the tree file to `out`.
void build(std::istream& in, std::ostream& out, const BuildArgs& args);
void build_files(const std::string& input, const std::string& output, const BuildArgs& args);

struct QueryArgs {
  std::string point;  ///< comma-separated coordinates
  std::optional<Count> knn;
  std::optional<Scalar> radius;
};

/// Prints "index,dist2" per result: ascending distance for knn, ascending
/// index for radius.
void query(std::istream& tree_file, std::ostream& out, const QueryArgs& args);
void query_file(const std::string& tree_path, std::ostream& out, const QueryArgs& args);

struct BenchArgs {
  Count n = 1000;
  unsigned dims = 4;
  SplitRule mode = SplitRule::round_robin;
  std::uint64_t seed = 1;
  unsigned reps = 1;
};

void bench(std::ostream& out, const BenchArgs& args);

/// Returns true iff every suite passes. `fixture_path` overrides the built-in
/// walkthrough tables when non-empty.
bool selftest(std::ostream& out, const std::string& fixture_path = {});

}  // namespace lbkd::cli
