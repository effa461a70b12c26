#pragma once

// Line-oriented polygon text format.
//
//   # comment
//   vertices:
//   -3/10 -2
//   3/10 -1
//   ...
//   lattice:          (optional; integer lattice when absent)
//   1 0
//   0 1
//   k: 5              (optional; written by search)
//
// A file may hold several records separated by blank lines.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlt/geometry.hpp"

namespace mlt {

struct PolygonRecord {
  std::vector<Point2> vertices;
  std::optional<Lattice2> lattice;
  std::optional<std::int64_t> k;
};

std::vector<PolygonRecord> parse_polygon_text(std::string_view text);
std::vector<PolygonRecord> read_polygon_file(const std::filesystem::path& path);

// Exactly one record expected.
PolygonRecord read_single_polygon(const std::filesystem::path& path);

std::string format_polygon(const ConvexPolygon& p, const std::optional<Lattice2>& lattice = std::nullopt,
                           std::optional<std::int64_t> k = std::nullopt);

std::string format_point(const Point2& p);

}  // namespace mlt
