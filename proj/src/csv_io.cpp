#include "lbkd/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "lbkd/error.hpp"

namespace lbkd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    const auto comma = line.find(',');
    fields.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

Scalar parse_scalar(std::string_view field, std::size_t line_no) {
  Scalar v{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw ParseError(where(line_no) + "'" + std::string(field) + "' is not a decimal number");
  }
  if (!std::isfinite(v)) {
    throw NonFiniteCoordinate(where(line_no) + "non-finite value '" + std::string(field) + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view field, std::size_t line_no) {
  std::uint64_t v{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw ParseError(where(line_no) + "'" + std::string(field) + "' is not an unsigned integer");
  }
  return v;
}

bool blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

std::string format_scalar(Scalar v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::vector<Scalar> parse_tuple(std::string_view text) {
  std::vector<Scalar> values;
  for (const auto field : split_fields(text)) values.push_back(parse_scalar(field, 1));
  return values;
}

PointSet read_points_csv(std::istream& in, unsigned k, bool with_payload) {
  PointSet points(k);
  const std::size_t expected = k + (with_payload ? 1 : 0);
  std::vector<Scalar> row(k);
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    const auto fields = split_fields(line);
    if (fields.size() != expected) {
      throw ParseError(where(line_no) + "expected " + std::to_string(expected) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (unsigned d = 0; d < k; ++d) row[d] = parse_scalar(fields[d], line_no);
    const Payload payload = with_payload ? parse_unsigned(fields[k], line_no) : points.size();
    points.push_back(row, payload);
  }
  return points;
}

void write_points_csv(std::ostream& out, const PointSet& points, bool with_payload) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    for (unsigned d = 0; d < points.dims(); ++d) out << (d ? "," : "") << format_scalar(p[d]);
    if (with_payload) out << ',' << points.payload(i);
    out << '\n';
  }
}

void write_tree_csv(std::ostream& out, const KdTree& tree, bool with_payload) {
  if (tree.empty()) return;
  const bool widest = tree.rule() == SplitRule::widest;
  for (unsigned d = 0; d < tree.dims(); ++d) out << (d ? "," : "") << "coord_" << d;
  if (widest) out << ",split_dim";
  if (with_payload) out << ",payload";
  out << '\n';
  for (NodeIndex s = 0; s < tree.size(); ++s) {
    const auto p = tree.points.point(s);
    for (unsigned d = 0; d < tree.dims(); ++d) out << (d ? "," : "") << format_scalar(p[d]);
    if (widest) out << ',' << unsigned{tree.split_dims[s]};
    if (with_payload) out << ',' << tree.points.payload(s);
    out << '\n';
  }
}

KdTree read_tree_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) {
      have_header = true;
      break;
    }
  }
  if (!have_header) return KdTree{TreeShape::of(0, 1), PointSet(1), {}};

  const auto header = split_fields(line);
  unsigned k = 0;
  while (k < header.size() && header[k] == "coord_" + std::to_string(k)) ++k;
  if (k == 0) throw ParseError(where(line_no) + "tree header must start with coord_0");
  std::size_t next = k;
  const bool widest = next < header.size() && header[next] == "split_dim";
  if (widest) ++next;
  const bool with_payload = next < header.size() && header[next] == "payload";
  if (with_payload) ++next;
  if (next != header.size()) {
    throw ParseError(where(line_no) + "unexpected header column '" + std::string(header[next]) +
                     "'");
  }
  if (k > kMaxDims) throw ParseError(where(line_no) + "too many dimensions");

  PointSet points(k);
  std::vector<std::uint8_t> split_dims;
  std::vector<Scalar> row(k);
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw ParseError(where(line_no) + "expected " + std::to_string(header.size()) +
                       " fields, got " + std::to_string(fields.size()));
    }
    for (unsigned d = 0; d < k; ++d) row[d] = parse_scalar(fields[d], line_no);
    std::size_t col = k;
    if (widest) {
      const auto dim = parse_unsigned(fields[col++], line_no);
      if (dim >= k) throw ParseError(where(line_no) + "split_dim out of range");
      split_dims.push_back(static_cast<std::uint8_t>(dim));
    }
    const Payload payload = with_payload ? parse_unsigned(fields[col], line_no) : points.size();
    points.push_back(row, payload);
  }
  if (points.size() > kMaxTreeSize) throw ParseError("tree has too many nodes");
  const auto n = static_cast<Count>(points.size());
  return KdTree{TreeShape::of(n, k), std::move(points), std::move(split_dims)};
}

}  // namespace lbkd
