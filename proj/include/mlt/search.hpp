#pragma once

// Exhaustive search over grid families of centrally symmetric convex
// polygons for small lattice-tiling multiplicities.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mlt/bolle.hpp"
#include "mlt/geometry.hpp"

namespace mlt {

struct SearchConfig {
  int edge_count = 8;               // 2m
  std::int64_t grid_denominator = 1;  // vertices in (1/q) Z^2
  Rational bound = 1;               // vertices in [-B, B]^2
  std::optional<std::int64_t> max_k;
  bool dedup = true;
  // Confirm every record with the sweep oracle.
  bool confirm = false;
  // When set, these polygons are checked instead of enumerating the grid.
  // Only polygons with edge_count vertices are considered.
  std::optional<std::vector<ConvexPolygon>> candidates;
};

// Throws Error(ConfigInvalid).
void validate(const SearchConfig& config);

struct SearchRecord {
  ConvexPolygon polygon;
  std::int64_t k = 0;
  TilingCertificate certificate;
  bool confirmed = false;
};

struct SearchOutcome {
  std::vector<SearchRecord> records;  // by k, then canonical polygon order
  std::size_t searched = 0;
};

using CandidateVisitor = std::function<void(const ConvexPolygon&)>;
using RecordSink = std::function<void(const SearchRecord&)>;

// Each origin-centered, centrally symmetric, strictly convex grid polygon with
// edge_count vertices is visited exactly once, in canonical form. The
// `candidates` field of the config is ignored here.
void enumerate_candidates(const SearchConfig& config, const CandidateVisitor& visit);
std::vector<ConvexPolygon> enumerate_candidates(const SearchConfig& config);

// Checks every candidate against Z^2. Candidate subtrees are evaluated in
// parallel; `sink` receives records as they are found, in a deterministic
// order that does not depend on thread count.
SearchOutcome search_min_k(const SearchConfig& config, const RecordSink& sink = {});

// Serial reference for search_min_k.
SearchOutcome search_min_k_serial(const SearchConfig& config);

struct Refuted {
  std::size_t searched = 0;
};
struct CounterexampleFound {
  SearchRecord record;
  bool oracle_confirmed = false;
  // True when the record is an oracle-confirmed tile with at least 8 edges
  // and k <= 4, which no correct implementation can produce.
  bool contradicts_lower_bound = false;
};
using RefutationResult = std::variant<Refuted, CounterexampleFound>;

// Requires max_k to be set.
RefutationResult refute_small_k(const SearchConfig& config);

// Polygon with edges e_1..e_m (sorted by angle) followed by their negations,
// starting at `start`.
ConvexPolygon cs_polygon_from_edge_vectors(std::vector<Vec2> edges, const Point2& start);

// m pairwise non-parallel integer vectors drawn from [-max_coord, max_coord]^2.
// Deterministic in `seed`; throws GenerationFailed if m directions cannot be drawn.
ConvexPolygon random_cs_integer_polygon(std::uint64_t seed, int m, int max_coord);

}  // namespace mlt
