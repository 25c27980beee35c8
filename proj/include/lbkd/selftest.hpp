#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lbkd/walkthrough.hpp"

namespace lbkd::verify {

struct SelftestOptions {
  std::uint64_t seed = 0x5eed2022;
  /// Expected walkthrough states; defaults to the built-in fixture.
  std::span<const StateTable> fixtures = walkthrough_tables();
};

/// Runs every verification suite and prints one "PASS name" or
/// "FAIL name: first failing case" line per suite. Output depends only on the
/// options, so repeated runs print identical reports. Returns true iff all pass.
bool run_selftest(std::ostream& out, const SelftestOptions& options = {});

/// Reads fixture tables from a JSON array of {name, tags, x, y} objects.
std::vector<StateTable> load_fixtures_json(std::istream& in);

}  // namespace lbkd::verify
