#pragma once

// Grid enumeration internals shared by the parallel search and its serial reference.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlt/search.hpp"

namespace mlt::detail {

// Grid point in units of 1/q.
struct IPoint {
  std::int64_t x;
  std::int64_t y;
};

// Vertex-driven enumeration of half chains v_0..v_{m-1}; the polygon is the
// chain followed by its reflection through the origin. With dedup on, v_0 is
// forced to be the lexicographic minimum so every polygon appears once.
class GridEnumerator {
 public:
  explicit GridEnumerator(const SearchConfig& config);

  std::size_t root_count() const { return roots_.size(); }
  void enumerate_root(std::size_t root, const std::function<void(std::span<const IPoint>)>& leaf) const;
  ConvexPolygon to_polygon(std::span<const IPoint> half) const;

 private:
  void extend(std::vector<IPoint>& chain, const std::function<void(std::span<const IPoint>)>& leaf) const;

  int m_;
  std::int64_t q_;
  std::int64_t n_;
  bool dedup_;
  std::vector<IPoint> roots_;
};

std::optional<SearchRecord> evaluate(const ConvexPolygon& p, const SearchConfig& config);
std::string format_for_error(const ConvexPolygon& p);
void sort_records(std::vector<SearchRecord>& records);

}  // namespace mlt::detail
