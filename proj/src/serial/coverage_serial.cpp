// Straightforward single-threaded sweep. Every segment pair is intersected and
// every representative is counted from scratch with covering_count_at; the
// parallel kernel in coverage.cpp must agree with it exactly.

#include <algorithm>

#include "mlt/coverage.hpp"

namespace mlt {

namespace {

struct Seg {
  Point2 a;
  Point2 b;
};

}  // namespace

CoverageReport slab_sweep_verify_serial(const ConvexPolygon& p, const Lattice2& lattice) {
  const ConvexPolygon pn = normalize_to_integer_lattice(p, lattice);
  const Rect unit{0, 1, 0, 1};
  const TranslateSet translates = collect_translates(pn, Lattice2::integer(), unit);

  std::vector<Seg> segs = {{{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}, {{0, 1}, {0, 0}}};
  for (const auto& off : translates.offsets) {
    const Vec2 shift{off.a, off.b};
    for (std::size_t e = 0; e < pn.size(); ++e) segs.push_back({pn.vertex(e) + shift, pn.vertex(e + 1) + shift});
  }

  std::vector<Rational> xs;
  for (const auto& s : segs) {
    xs.push_back(s.a.x);
    xs.push_back(s.b.x);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Vec2 r = segs[i].b - segs[i].a;
      const Vec2 w = segs[j].b - segs[j].a;
      const Rational denom = cross(r, w);
      if (denom == 0) continue;
      const Vec2 d = segs[j].a - segs[i].a;
      const Rational t = cross(d, w) / denom;
      const Rational u = cross(d, r) / denom;
      if (t >= 0 && t <= 1 && u >= 0 && u <= 1) xs.push_back(segs[i].a.x + t * r.x);
    }
  }
  std::erase_if(xs, [](const Rational& x) { return x < 0 || x > 1; });
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  CoverageReport report;
  bool first = true;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const Rational xm = (xs[s] + xs[s + 1]) / 2;
    std::vector<Rational> ys;
    for (const auto& seg : segs) {
      const Rational& x0 = seg.a.x;
      const Rational& x1 = seg.b.x;
      if (x0 == x1) continue;
      if ((x0 < xm && xm < x1) || (x1 < xm && xm < x0)) {
        ys.push_back(seg.a.y + (xm - x0) * (seg.b.y - seg.a.y) / (x1 - x0));
      }
    }
    std::erase_if(ys, [](const Rational& y) { return y < 0 || y > 1; });
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
      const Point2 q{xm, (ys[i] + ys[i + 1]) / 2};
      const CoverageCount c = covering_count_at(pn, Lattice2::integer(), q);
      if (c.boundary != 0) throw Error(ErrorKind::InternalInconsistency, "representative lies on a translate edge");
      ++report.cells_examined;
      if (first || c.interior < report.min_multiplicity) {
        report.min_multiplicity = c.interior;
        report.witness_min = lattice.from_coords(q);
      }
      if (first || c.interior > report.max_multiplicity) {
        report.max_multiplicity = c.interior;
        report.witness_max = lattice.from_coords(q);
      }
      first = false;
    }
  }
  return report;
}

}  // namespace mlt
