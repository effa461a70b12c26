#include "mlt/coverage.hpp"

#include <algorithm>

namespace mlt {

CoverageCount covering_count_at(const ConvexPolygon& p, const Lattice2& lattice, const Point2& q) {
  const ConvexPolygon pn = normalize_to_integer_lattice(p, lattice);
  const Point2 qn = lattice.to_coords(q);
  const Rect box = bounding_box(pn);

  // q in P + l  <=>  q - l in P, so l ranges over the box q - bbox(P).
  const auto ax0 = to_int64(ceil_of(qn.x - box.xmax));
  const auto ax1 = to_int64(floor_of(qn.x - box.xmin));
  const auto ay0 = to_int64(ceil_of(qn.y - box.ymax));
  const auto ay1 = to_int64(floor_of(qn.y - box.ymin));

  CoverageCount count;
  for (auto a = ax0; a <= ax1; ++a) {
    for (auto b = ay0; b <= ay1; ++b) {
      switch (point_location(pn, Point2{qn.x - a, qn.y - b})) {
        case Location::Interior: ++count.interior; break;
        case Location::Boundary: ++count.boundary; break;
        case Location::Exterior: break;
      }
    }
  }
  return count;
}

TranslateSet collect_translates(const ConvexPolygon& p, const Lattice2& lattice, const Rect& region,
                                int extra_rings) {
  const Point2 corners[4] = {{region.xmin, region.ymin},
                             {region.xmax, region.ymin},
                             {region.xmax, region.ymax},
                             {region.xmin, region.ymax}};
  std::vector<Point2> rc;
  for (const auto& c : corners) rc.push_back(lattice.to_coords(c));
  std::vector<Point2> pc;
  for (const auto& v : p.vertices()) pc.push_back(lattice.to_coords(v));

  auto minmax = [](const std::vector<Point2>& pts, bool x) {
    Rational lo = x ? pts[0].x : pts[0].y;
    Rational hi = lo;
    for (const auto& q : pts) {
      const Rational& c = x ? q.x : q.y;
      if (c < lo) lo = c;
      if (c > hi) hi = c;
    }
    return std::pair{lo, hi};
  };
  const auto [rxl, rxh] = minmax(rc, true);
  const auto [ryl, ryh] = minmax(rc, false);
  const auto [pxl, pxh] = minmax(pc, true);
  const auto [pyl, pyh] = minmax(pc, false);

  const auto a0 = to_int64(ceil_of(rxl - pxh)) - extra_rings;
  const auto a1 = to_int64(floor_of(rxh - pxl)) + extra_rings;
  const auto b0 = to_int64(ceil_of(ryl - pyh)) - extra_rings;
  const auto b1 = to_int64(floor_of(ryh - pyl)) + extra_rings;

  TranslateSet out{region, {}};
  for (auto a = a0; a <= a1; ++a) {
    for (auto b = b0; b <= b1; ++b) {
      const Vec2 shift = lattice.from_coords(Vec2{a, b});
      if (intersects(p.translated(shift), region)) out.offsets.push_back({a, b});
    }
  }
  return out;
}

namespace {

struct Chord {
  Rational lo;
  Rational hi;
};

// Per base edge, y = slope * x + intercept, for non-vertical edges.
struct EdgeLine {
  Rational xmin;
  Rational xmax;
  Rational slope;
  Rational intercept;
};

struct SlabResult {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::size_t cells = 0;
  Point2 witness_min;
  Point2 witness_max;
};

struct Segment {
  Point2 a;  // a.x <= b.x
  Point2 b;
  Rational ymin;
  Rational ymax;
  std::size_t translate;
  std::size_t edge;
};

// Event abscissae in [0,1]: endpoints, crossings with y = 0 and y = 1, and
// pairwise intersections inside the closed unit square. Within each open slab
// between consecutive events every cell of the clipped arrangement spans the
// slab, so one vertical line per slab meets all of them.
std::vector<Rational> unit_square_events(const ConvexPolygon& pn, const std::vector<LatticeOffset>& offsets) {
  const auto n = pn.size();
  std::vector<std::vector<bool>> parallel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) parallel[i][j] = cross(pn.edge_vector(i), pn.edge_vector(j)) == 0;

  std::vector<Segment> segs;
  for (std::size_t t = 0; t < offsets.size(); ++t) {
    const Vec2 shift{offsets[t].a, offsets[t].b};
    for (std::size_t e = 0; e < n; ++e) {
      Point2 a = pn.vertex(e) + shift;
      Point2 b = pn.vertex(e + 1) + shift;
      if (b.x < a.x) std::swap(a, b);
      Rational ymin = a.y < b.y ? a.y : b.y;
      Rational ymax = a.y < b.y ? b.y : a.y;
      if (b.x < 0 || a.x > 1 || ymax < 0 || ymin > 1) continue;
      segs.push_back({std::move(a), std::move(b), std::move(ymin), std::move(ymax), t, e});
    }
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& s, const Segment& t) { return s.a.x < t.a.x; });

  std::vector<Rational> xs{Rational(0), Rational(1)};
  for (const auto& s : segs) {
    if (s.a.x >= 0 && s.a.x <= 1) xs.push_back(s.a.x);
    if (s.b.x >= 0 && s.b.x <= 1) xs.push_back(s.b.x);
    if (s.a.y == s.b.y) continue;
    for (int level = 0; level <= 1; ++level) {
      if (s.ymin < level && level < s.ymax) {
        const Rational x = s.a.x + (level - s.a.y) * (s.b.x - s.a.x) / (s.b.y - s.a.y);
        if (x >= 0 && x <= 1) xs.push_back(x);
      }
    }
  }

#pragma omp parallel
  {
    std::vector<Rational> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const Segment& s = segs[i];
      const Vec2 r = s.b - s.a;
      for (std::size_t j = i + 1; j < segs.size() && segs[j].a.x <= s.b.x; ++j) {
        const Segment& u = segs[j];
        if (u.translate == s.translate || parallel[s.edge][u.edge]) continue;
        if (u.ymax < s.ymin || s.ymax < u.ymin) continue;
        const Vec2 w = u.b - u.a;
        const Rational denom = cross(r, w);
        const Vec2 d = u.a - s.a;
        Rational t = cross(d, w) / denom;
        if (t < 0 || t > 1) continue;
        const Rational v = cross(d, r) / denom;
        if (v < 0 || v > 1) continue;
        const Rational y = s.a.y + t * r.y;
        if (y < 0 || y > 1) continue;
        Rational x = s.a.x + t * r.x;
        if (x >= 0 && x <= 1) local.push_back(std::move(x));
      }
    }
#pragma omp critical
    xs.insert(xs.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }

  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

CoverageReport merge_slabs(const std::vector<SlabResult>& results, const Lattice2& lattice) {
  CoverageReport report;
  bool first = true;
  for (const auto& r : results) {
    if (r.cells == 0) continue;
    report.cells_examined += r.cells;
    if (first || r.min < report.min_multiplicity) {
      report.min_multiplicity = r.min;
      report.witness_min = lattice.from_coords(r.witness_min);
    }
    if (first || r.max > report.max_multiplicity) {
      report.max_multiplicity = r.max;
      report.witness_max = lattice.from_coords(r.witness_max);
    }
    first = false;
  }
  return report;
}

}  // namespace

CoverageReport slab_sweep_verify(const ConvexPolygon& p, const Lattice2& lattice) {
  const ConvexPolygon pn = normalize_to_integer_lattice(p, lattice);
  const Rect unit{0, 1, 0, 1};
  const TranslateSet translates = collect_translates(pn, Lattice2::integer(), unit);
  const std::vector<Rational> xs = unit_square_events(pn, translates.offsets);

  std::vector<EdgeLine> lines;
  for (std::size_t i = 0; i < pn.size(); ++i) {
    const Point2& a = pn.vertex(i);
    const Point2& b = pn.vertex(i + 1);
    if (a.x == b.x) continue;
    EdgeLine e;
    e.xmin = a.x < b.x ? a.x : b.x;
    e.xmax = a.x < b.x ? b.x : a.x;
    e.slope = (b.y - a.y) / (b.x - a.x);
    e.intercept = a.y - e.slope * a.x;
    lines.push_back(std::move(e));
  }

  const std::size_t slabs = xs.size() - 1;
  std::vector<SlabResult> results(slabs);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t s = 0; s < slabs; ++s) {
    const Rational xm = (xs[s] + xs[s + 1]) / 2;

    std::vector<Chord> chords;
    std::vector<Rational> ys{Rational(0), Rational(1)};
    for (const auto& off : translates.offsets) {
      const Rational local = xm - off.a;
      bool have = false;
      Chord c;
      for (const auto& e : lines) {
        if (!(e.xmin < local && local < e.xmax)) continue;
        Rational y = e.slope * local + e.intercept + off.b;
        if (!have) {
          c.lo = y;
          c.hi = std::move(y);
          have = true;
        } else if (y < c.lo) {
          c.lo = std::move(y);
        } else if (y > c.hi) {
          c.hi = std::move(y);
        }
      }
      if (!have) continue;
      ys.push_back(c.lo);
      ys.push_back(c.hi);
      chords.push_back(std::move(c));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    // depth[i] = number of chords covering the open gap (ys[i], ys[i+1]).
    std::vector<std::int64_t> delta(ys.size() + 1, 0);
    for (const auto& c : chords) {
      const auto lo = std::lower_bound(ys.begin(), ys.end(), c.lo) - ys.begin();
      const auto hi = std::lower_bound(ys.begin(), ys.end(), c.hi) - ys.begin();
      ++delta[static_cast<std::size_t>(lo)];
      --delta[static_cast<std::size_t>(hi)];
    }

    SlabResult r;
    bool first = true;
    std::int64_t depth = 0;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
      depth += delta[i];
      if (ys[i] < 0 || ys[i + 1] > 1) continue;
      ++r.cells;
      if (first || depth < r.min) {
        r.min = depth;
        r.witness_min = Point2{xm, (ys[i] + ys[i + 1]) / 2};
      }
      if (first || depth > r.max) {
        r.max = depth;
        r.witness_max = Point2{xm, (ys[i] + ys[i + 1]) / 2};
      }
      first = false;
    }
    results[s] = std::move(r);
  }

  return merge_slabs(results, lattice);
}

bool verify_k_fold(const ConvexPolygon& p, const Lattice2& lattice, std::int64_t k) {
  if (k < 1) return false;
  if (area(p) != Rational(k) * abs_of(lattice.det())) return false;
  const CoverageReport r = slab_sweep_verify(p, lattice);
  return r.min_multiplicity == k && r.max_multiplicity == k;
}

}  // namespace mlt
