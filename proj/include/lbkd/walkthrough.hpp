#pragma once

// Golden fixture: a 10-point 2-d build recorded after every phase.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lbkd/point_set.hpp"

namespace lbkd::verify {

struct StateTable {
  std::string name;
  std::vector<std::uint32_t> tags;
  std::vector<Scalar> x;
  std::vector<Scalar> y;

  friend bool operator==(const StateTable&, const StateTable&) = default;
};

/// (10,15),(46,63),(68,21),(40,33),(25,54),(15,43),(44,58),(45,40),(62,69),(53,67)
PointSet walkthrough_input();

/// The eight expected states: initial, after each sort and update, final.
std::span<const StateTable> walkthrough_tables();

/// Runs an instrumented round-robin build of a 2-d point set and records the
/// state after every phase, named like the fixture tables.
std::vector<StateTable> record_walkthrough(const PointSet& input);

/// First mismatching table name between expected and recorded, or "" if equal.
std::string first_mismatch(std::span<const StateTable> expected,
                           std::span<const StateTable> recorded);

}  // namespace lbkd::verify
