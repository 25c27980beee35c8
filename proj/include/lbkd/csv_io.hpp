#pragma once

// Plain-text interchange.
//
// Point files: one point per line, k comma-separated decimals, optionally a
// trailing unsigned payload column. No header.
//
// Tree files: a header row `coord_0,...,coord_{k-1}[,split_dim][,payload]`
// followed by one node per line in level order. An empty tree is written as an
// empty file. Scalars use the shortest representation that round-trips.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lbkd/kd_tree.hpp"
#include "lbkd/point_set.hpp"

namespace lbkd {

/// Throws ParseError on malformed rows and NonFiniteCoordinate on nan/inf.
PointSet read_points_csv(std::istream& in, unsigned k, bool with_payload);

void write_points_csv(std::ostream& out, const PointSet& points, bool with_payload);

void write_tree_csv(std::ostream& out, const KdTree& tree, bool with_payload);

/// Reads a tree file written by write_tree_csv. Throws ParseError.
KdTree read_tree_csv(std::istream& in);

/// Parses "1.5,2,3" into scalars. Throws ParseError / NonFiniteCoordinate.
std::vector<Scalar> parse_tuple(std::string_view text);

std::string format_scalar(Scalar v);

}  // namespace lbkd
