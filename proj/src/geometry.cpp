#include "mlt/geometry.hpp"

#include <algorithm>

namespace mlt {

std::strong_ordering lex_compare(const Point2& a, const Point2& b) {
  if (const int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (const int c = cmp(a.y, b.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Lattice2::Lattice2() : b1_{1, 0}, b2_{0, 1}, det_(1) {}

Lattice2::Lattice2(Vec2 b1, Vec2 b2) : b1_(std::move(b1)), b2_(std::move(b2)), det_(cross(b1_, b2_)) {
  if (det_ == 0) throw Error(ErrorKind::SingularLattice, "basis vectors are linearly dependent");
}

bool Lattice2::is_integer_lattice() const {
  return b1_ == Vec2{1, 0} && b2_ == Vec2{0, 1};
}

Point2 Lattice2::to_coords(const Point2& q) const {
  const Vec2 v = to_coords(Vec2{q.x, q.y});
  return {v.x, v.y};
}

Vec2 Lattice2::to_coords(const Vec2& v) const {
  return {cross(v, b2_) / det_, cross(b1_, v) / det_};
}

Point2 Lattice2::from_coords(const Point2& c) const {
  return {c.x * b1_.x + c.y * b2_.x, c.x * b1_.y + c.y * b2_.y};
}

Vec2 Lattice2::from_coords(const Vec2& c) const {
  return {c.x * b1_.x + c.y * b2_.x, c.x * b1_.y + c.y * b2_.y};
}

bool Lattice2::contains(const Vec2& v) const {
  const Vec2 c = to_coords(v);
  return is_integer(c.x) && is_integer(c.y);
}

ConvexPolygon ConvexPolygon::translated(const Vec2& t) const {
  std::vector<Point2> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v + t);
  return ConvexPolygon(std::move(out));
}

std::strong_ordering canonical_order(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (const auto c = lex_compare(a.vertices_[i], b.vertices_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

Rational doubled_signed_area(const std::vector<Point2>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half_plane(const Vec2& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

}  // namespace

ConvexPolygon canonicalize(std::vector<Point2> raw) {
  std::vector<Point2> v;
  v.reserve(raw.size());
  for (auto& p : raw) {
    if (v.empty() || !(v.back() == p)) v.push_back(std::move(p));
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() < 3) throw Error(ErrorKind::Degenerate, "fewer than 3 distinct vertices");

  const Rational twice_area = doubled_signed_area(v);
  if (twice_area == 0) throw Error(ErrorKind::Degenerate, "zero area");
  if (twice_area < 0) std::reverse(v.begin(), v.end());

  // Merge collinear runs; a zero turn that doubles back is a fold, not a run.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& prev = v[(i + v.size() - 1) % v.size()];
      const auto& next = v[(i + 1) % v.size()];
      if (orient(prev, v[i], next) != 0) continue;
      const Vec2 d1 = v[i] - prev;
      const Vec2 d2 = next - v[i];
      if (d1.x * d2.x + d1.y * d2.y <= 0) throw Error(ErrorKind::NotConvex, "polygon folds back on itself");
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (v.size() < 3) throw Error(ErrorKind::Degenerate, "fewer than 3 vertices after merging collinear points");

  int wraps = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    const auto& c = v[(i + 2) % v.size()];
    if (orient(a, b, c) < 0) throw Error(ErrorKind::NotConvex, "reflex vertex");
    if (half_plane(b - a) == 1 && half_plane(c - b) == 0) ++wraps;
  }
  if (wraps != 1) throw Error(ErrorKind::NotConvex, "boundary winds more than once");

  const auto first = std::min_element(v.begin(), v.end(), [](const Point2& a, const Point2& b) {
    return lex_compare(a, b) < 0;
  });
  std::rotate(v.begin(), first, v.end());
  return ConvexPolygon(std::move(v));
}

Rational area(const ConvexPolygon& p) {
  Rational s = 0;
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = p.vertex(i);
    const auto& b = p.vertex(i + 1);
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2;
}

std::optional<Point2> symmetry_center(const ConvexPolygon& p) {
  const auto n = p.size();
  if (n % 2 != 0) return std::nullopt;
  const auto m = n / 2;
  const Point2 c = midpoint(p.vertex(0), p.vertex(m));
  for (std::size_t i = 1; i < m; ++i) {
    if (!(midpoint(p.vertex(i), p.vertex(i + m)) == c)) return std::nullopt;
  }
  return c;
}

ConvexPolygon normalize_to_integer_lattice(const ConvexPolygon& p, const Lattice2& lattice) {
  if (lattice.is_integer_lattice()) return p;
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(lattice.to_coords(v));
  return canonicalize(std::move(out));
}

ConvexPolygon from_integer_lattice(const ConvexPolygon& p, const Lattice2& lattice) {
  if (lattice.is_integer_lattice()) return p;
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(lattice.from_coords(v));
  return canonicalize(std::move(out));
}

Location point_location(const ConvexPolygon& p, const Point2& q) {
  bool on_edge = false;
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int s = sgn(orient(p.vertex(i), p.vertex(i + 1), q));
    if (s < 0) return Location::Exterior;
    if (s == 0) on_edge = true;
  }
  return on_edge ? Location::Boundary : Location::Interior;
}

bool is_half_lattice_point(const Point2& q, const Lattice2& lattice) {
  const Point2 c = lattice.to_coords(q);
  return is_half_integer_multiple(c.x) && is_half_integer_multiple(c.y);
}

Rect bounding_box(const ConvexPolygon& p) {
  Rect r{p.vertex(0).x, p.vertex(0).x, p.vertex(0).y, p.vertex(0).y};
  for (const auto& v : p.vertices()) {
    if (v.x < r.xmin) r.xmin = v.x;
    if (v.x > r.xmax) r.xmax = v.x;
    if (v.y < r.ymin) r.ymin = v.y;
    if (v.y > r.ymax) r.ymax = v.y;
  }
  return r;
}

bool intersects(const ConvexPolygon& p, const Rect& r) {
  const Rect b = bounding_box(p);
  if (b.xmax < r.xmin || r.xmax < b.xmin || b.ymax < r.ymin || r.ymax < b.ymin) return false;
  const Point2 corners[4] = {{r.xmin, r.ymin}, {r.xmax, r.ymin}, {r.xmax, r.ymax}, {r.xmin, r.ymax}};
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool all_outside = std::all_of(std::begin(corners), std::end(corners), [&](const Point2& c) {
      return orient(p.vertex(i), p.vertex(i + 1), c) < 0;
    });
    if (all_outside) return false;
  }
  return true;
}

}  // namespace mlt
