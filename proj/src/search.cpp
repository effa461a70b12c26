#include "mlt/search.hpp"

#include <algorithm>
#include <random>

#include "mlt/coverage.hpp"
#include "search_grid.hpp"

namespace mlt {

void validate(const SearchConfig& config) {
  if (config.edge_count < 4 || config.edge_count % 2 != 0)
    throw Error(ErrorKind::ConfigInvalid, "edge count must be even and at least 4, got " + std::to_string(config.edge_count));
  if (config.grid_denominator < 1)
    throw Error(ErrorKind::ConfigInvalid, "grid denominator must be positive");
  if (config.bound <= 0) throw Error(ErrorKind::ConfigInvalid, "bound must be positive");
  if (config.max_k && *config.max_k < 1) throw Error(ErrorKind::ConfigInvalid, "max-k must be positive");
}

namespace detail {

GridEnumerator::GridEnumerator(const SearchConfig& config)
    : m_(config.edge_count / 2),
      q_(config.grid_denominator),
      n_(to_int64(floor_of(config.bound * Rational(config.grid_denominator)))),
      dedup_(config.dedup) {
  for (auto x = -n_; x <= n_; ++x) {
    for (auto y = -n_; y <= n_; ++y) {
      if (!dedup_ || x < 0 || (x == 0 && y < 0)) roots_.push_back({x, y});
    }
  }
  if (!dedup_) {
    std::erase_if(roots_, [](const IPoint& p) { return p.x == 0 && p.y == 0; });
  }
}

namespace {

std::int64_t icross(const IPoint& a, const IPoint& b) { return a.x * b.y - a.y * b.x; }
IPoint isub(const IPoint& a, const IPoint& b) { return {a.x - b.x, a.y - b.y}; }
bool ilex_less(const IPoint& a, const IPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

void GridEnumerator::enumerate_root(std::size_t root, const std::function<void(std::span<const IPoint>)>& leaf) const {
  std::vector<IPoint> chain{roots_[root]};
  chain.reserve(static_cast<std::size_t>(m_));
  extend(chain, leaf);
}

void GridEnumerator::extend(std::vector<IPoint>& chain,
                            const std::function<void(std::span<const IPoint>)>& leaf) const {
  const IPoint& v0 = chain.front();
  const IPoint anti{-v0.x, -v0.y};
  const std::size_t i = chain.size();

  if (i == static_cast<std::size_t>(m_)) {
    // Close the half chain at -v0.
    const IPoint last = isub(anti, chain.back());
    if (last.x == 0 && last.y == 0) return;
    const IPoint e0 = isub(chain[1], chain[0]);
    const IPoint prev = isub(chain.back(), chain[i - 2]);
    if (icross(prev, last) <= 0 || icross(e0, last) <= 0) return;
    leaf(chain);
    return;
  }

  for (auto x = -n_; x <= n_; ++x) {
    for (auto y = -n_; y <= n_; ++y) {
      const IPoint v{x, y};
      if (dedup_ && (!ilex_less(v0, v) || !ilex_less(v0, IPoint{-x, -y}))) continue;
      const IPoint e = isub(v, chain.back());
      if (e.x == 0 && e.y == 0) continue;
      // -v0 is a later vertex, so it must lie strictly left of the new edge.
      if (icross(e, isub(anti, v)) <= 0) continue;
      if (i >= 2) {
        const IPoint e0 = isub(chain[1], chain[0]);
        const IPoint prev = isub(chain.back(), chain[i - 2]);
        if (icross(prev, e) <= 0 || icross(e0, e) <= 0) continue;
        if (icross(e0, isub(v, chain[0])) <= 0) continue;
      }
      chain.push_back(v);
      extend(chain, leaf);
      chain.pop_back();
    }
  }
}

ConvexPolygon GridEnumerator::to_polygon(std::span<const IPoint> half) const {
  std::vector<Point2> verts;
  verts.reserve(half.size() * 2);
  for (const auto& v : half) verts.push_back({make_rational(v.x, q_), make_rational(v.y, q_)});
  for (const auto& v : half) verts.push_back({make_rational(-v.x, q_), make_rational(-v.y, q_)});
  return canonicalize(std::move(verts));
}

std::optional<SearchRecord> evaluate(const ConvexPolygon& p, const SearchConfig& config) {
  auto result = check_bolle(p, Lattice2::integer());
  auto* cert = std::get_if<TilingCertificate>(&result);
  if (!cert) return std::nullopt;
  if (config.max_k && cert->k > *config.max_k) return std::nullopt;
  SearchRecord rec{p, cert->k, std::move(*cert), false};
  if (config.confirm) {
    if (!verify_k_fold(p, Lattice2::integer(), rec.k))
      throw Error(ErrorKind::InternalInconsistency, "oracle rejects a certified tile:\n" + format_for_error(p));
    rec.confirmed = true;
  }
  return rec;
}

std::string format_for_error(const ConvexPolygon& p) {
  std::string s;
  for (const auto& v : p.vertices()) s += "  " + to_string(v.x) + " " + to_string(v.y) + "\n";
  return s;
}

void sort_records(std::vector<SearchRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const SearchRecord& a, const SearchRecord& b) {
    if (a.k != b.k) return a.k < b.k;
    return canonical_order(a.polygon, b.polygon) < 0;
  });
}

}  // namespace detail

void enumerate_candidates(const SearchConfig& config, const CandidateVisitor& visit) {
  validate(config);
  const detail::GridEnumerator grid(config);
  for (std::size_t r = 0; r < grid.root_count(); ++r) {
    grid.enumerate_root(r, [&](std::span<const detail::IPoint> half) { visit(grid.to_polygon(half)); });
  }
}

std::vector<ConvexPolygon> enumerate_candidates(const SearchConfig& config) {
  std::vector<ConvexPolygon> out;
  enumerate_candidates(config, [&](const ConvexPolygon& p) { out.push_back(p); });
  return out;
}

SearchOutcome search_min_k(const SearchConfig& config, const RecordSink& sink) {
  validate(config);
  SearchOutcome outcome;

  if (config.candidates) {
    for (const auto& p : *config.candidates) {
      if (p.size() != static_cast<std::size_t>(config.edge_count)) continue;
      ++outcome.searched;
      if (auto rec = detail::evaluate(p, config)) {
        if (sink) sink(*rec);
        outcome.records.push_back(std::move(*rec));
      }
    }
    detail::sort_records(outcome.records);
    return outcome;
  }

  const detail::GridEnumerator grid(config);
  const std::size_t roots = grid.root_count();
  std::size_t searched = 0;
  std::vector<std::vector<SearchRecord>> per_root(roots);

#pragma omp parallel for schedule(dynamic, 1) ordered reduction(+ : searched)
  for (std::size_t r = 0; r < roots; ++r) {
    grid.enumerate_root(r, [&](std::span<const detail::IPoint> half) {
      ++searched;
      if (auto rec = detail::evaluate(grid.to_polygon(half), config)) per_root[r].push_back(std::move(*rec));
    });
#pragma omp ordered
    {
      if (sink) {
        for (const auto& rec : per_root[r]) sink(rec);
      }
    }
  }

  outcome.searched = searched;
  for (auto& v : per_root) {
    for (auto& rec : v) outcome.records.push_back(std::move(rec));
  }
  detail::sort_records(outcome.records);
  return outcome;
}

RefutationResult refute_small_k(const SearchConfig& config) {
  if (!config.max_k) throw Error(ErrorKind::ConfigInvalid, "refutation needs max-k");
  SearchOutcome outcome = search_min_k(config);
  if (outcome.records.empty()) return Refuted{outcome.searched};

  CounterexampleFound found{std::move(outcome.records.front()), false, false};
  found.oracle_confirmed = verify_k_fold(found.record.polygon, Lattice2::integer(), found.record.k);
  found.contradicts_lower_bound = found.oracle_confirmed && config.edge_count >= 8 && found.record.k <= 4;
  return found;
}

ConvexPolygon cs_polygon_from_edge_vectors(std::vector<Vec2> edges, const Point2& start) {
  for (auto& e : edges) {
    if (e.y < 0 || (e.y == 0 && e.x < 0)) e = -e;
  }
  std::sort(edges.begin(), edges.end(), [](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
  std::vector<Point2> verts{start};
  for (const auto& e : edges) verts.push_back(verts.back() + e);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) verts.push_back(verts.back() - edges[i]);
  return canonicalize(std::move(verts));
}

ConvexPolygon random_cs_integer_polygon(std::uint64_t seed, int m, int max_coord) {
  if (m < 2) throw Error(ErrorKind::ConfigInvalid, "need at least two edge directions");
  if (max_coord < 1) throw Error(ErrorKind::ConfigInvalid, "max_coord must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-max_coord, max_coord);

  std::vector<Vec2> edges;
  for (int attempt = 0; attempt < 1000 && static_cast<int>(edges.size()) < m; ++attempt) {
    const Vec2 v{coord(rng), coord(rng)};
    if (v.x == 0 && v.y == 0) continue;
    const bool parallel = std::any_of(edges.begin(), edges.end(), [&](const Vec2& e) { return cross(e, v) == 0; });
    if (!parallel) edges.push_back(v);
  }
  if (static_cast<int>(edges.size()) < m)
    throw Error(ErrorKind::GenerationFailed, "could not draw " + std::to_string(m) + " non-parallel vectors");
  const Point2 start{coord(rng), coord(rng)};
  return cs_polygon_from_edge_vectors(std::move(edges), start);
}

}  // namespace mlt
