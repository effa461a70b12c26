#pragma once

// Exact planar primitives: points, vectors, lattices, convex polygons.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "mlt/error.hpp"
#include "mlt/rational.hpp"

namespace mlt {

struct Vec2 {
  Rational x;
  Rational y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
inline Point2 operator-(const Point2& p, const Vec2& v) { return {p.x - v.x, p.y - v.y}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(const Vec2& v) { return {-v.x, -v.y}; }
inline Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Signed doubled area of the triangle (a, b, c); positive for a left turn.
inline Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Point2 midpoint(const Point2& a, const Point2& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

// Lexicographic (x, then y).
std::strong_ordering lex_compare(const Point2& a, const Point2& b);

// A planar lattice given by two basis vectors. The default is the integer lattice.
class Lattice2 {
 public:
  Lattice2();
  // Throws Error(SingularLattice) if det(b1, b2) == 0.
  Lattice2(Vec2 b1, Vec2 b2);

  static Lattice2 integer() { return Lattice2(); }

  const Vec2& b1() const { return b1_; }
  const Vec2& b2() const { return b2_; }
  const Rational& det() const { return det_; }
  bool is_integer_lattice() const;

  // Coefficients (a, b) with q = a*b1 + b*b2.
  Point2 to_coords(const Point2& q) const;
  Vec2 to_coords(const Vec2& v) const;
  Point2 from_coords(const Point2& c) const;
  Vec2 from_coords(const Vec2& c) const;

  bool contains(const Vec2& v) const;

  friend bool operator==(const Lattice2&, const Lattice2&) = default;

 private:
  Vec2 b1_;
  Vec2 b2_;
  Rational det_;
};

// Strictly convex polygon, counterclockwise, starting at its lexicographically
// smallest vertex. Only constructible through canonicalize().
class ConvexPolygon {
 public:
  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  // Edge i runs from vertex(i) to vertex(i + 1).
  Vec2 edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  ConvexPolygon translated(const Vec2& t) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;
  friend std::strong_ordering canonical_order(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  friend ConvexPolygon canonicalize(std::vector<Point2> raw);
  explicit ConvexPolygon(std::vector<Point2> v) : vertices_(std::move(v)) {}

  std::vector<Point2> vertices_;
};

// Merges collinear runs and duplicate points, fixes orientation to CCW and
// rotates to the lexicographic minimum. Throws NotConvex or Degenerate.
ConvexPolygon canonicalize(std::vector<Point2> raw);

Rational area(const ConvexPolygon& p);

std::optional<Point2> symmetry_center(const ConvexPolygon& p);

// Applies the inverse basis map of `lattice` to every vertex.
ConvexPolygon normalize_to_integer_lattice(const ConvexPolygon& p, const Lattice2& lattice);

// Applies the forward basis map (inverse of the above).
ConvexPolygon from_integer_lattice(const ConvexPolygon& p, const Lattice2& lattice);

enum class Location { Interior, Boundary, Exterior };

Location point_location(const ConvexPolygon& p, const Point2& q);

bool is_half_lattice_point(const Point2& q, const Lattice2& lattice);

// Closed axis-aligned rectangle.
struct Rect {
  Rational xmin;
  Rational xmax;
  Rational ymin;
  Rational ymax;
};

Rect bounding_box(const ConvexPolygon& p);

// Exact test for a nonempty intersection of the closed polygon and closed rectangle.
bool intersects(const ConvexPolygon& p, const Rect& r);

}  // namespace mlt
