#include "mlt/bolle.hpp"

namespace mlt {

const char* to_string(EdgeCase c) {
  switch (c) {
    case EdgeCase::MidpointInHalfLattice: return "midpoint-in-half-lattice";
    case EdgeCase::LatticeVectorEdge: return "lattice-vector-edge";
  }
  return "?";
}

const char* to_string(BolleFailureReason r) {
  switch (r) {
    case BolleFailureReason::NotCentrallySymmetric: return "not-centrally-symmetric";
    case BolleFailureReason::EdgeWithoutHalfLatticeInteriorPoint: return "edge-without-half-lattice-interior-point";
    case BolleFailureReason::MidpointNotHalfLatticeAndEdgeNotLatticeVector:
      return "midpoint-not-half-lattice-and-edge-not-lattice-vector";
  }
  return "?";
}

std::vector<Point2> half_lattice_points_on_edge(const Point2& a, const Point2& b, const Lattice2& lattice) {
  const Point2 ca = lattice.to_coords(a);
  const Point2 cb = lattice.to_coords(b);
  const Vec2 d = cb - ca;
  if (d.x == 0 && d.y == 0) throw Error(ErrorKind::Degenerate, "edge endpoints coincide");

  // Walk the coordinate whose half-integral values are sparser along the
  // segment; the other coordinate is then tested exactly.
  const bool use_x = d.y == 0 || (d.x != 0 && abs_of(d.x) <= abs_of(d.y));
  const Rational& start = use_x ? ca.x : ca.y;
  const Rational& end = use_x ? cb.x : cb.y;
  const Rational& step = use_x ? d.x : d.y;
  const Rational& other_start = use_x ? ca.y : ca.x;
  const Rational& other_step = use_x ? d.y : d.x;

  std::vector<Point2> out;
  if (other_step == 0 && !is_half_integer_multiple(other_start)) return out;

  // Integers n with 2*coord(t) = n strictly inside (0, 1) in t.
  const Rational lo = 2 * (step > 0 ? start : end);
  const Rational hi = 2 * (step > 0 ? end : start);
  Integer first = floor_of(lo) + 1;
  Integer last = ceil_of(hi) - 1;
  for (Integer n = first; n <= last; ++n) {
    const Integer idx = step > 0 ? n : Integer(first + last - n);
    const Rational t = (Rational(idx) / 2 - start) / step;
    const Rational other = other_start + t * other_step;
    if (!is_half_integer_multiple(other)) continue;
    const Point2 c = ca + t * d;
    out.push_back(lattice.from_coords(c));
  }
  return out;
}

namespace {

bool strictly_between(const Point2& a, const Point2& b, const Point2& q) {
  if (orient(a, b, q) != 0) return false;
  const Vec2 d = b - a;
  const Vec2 w = q - a;
  const Rational dot = d.x * w.x + d.y * w.y;
  return dot > 0 && dot < d.x * d.x + d.y * d.y;
}

}  // namespace

BolleResult check_bolle(const ConvexPolygon& p, const Lattice2& lattice) {
  const auto center = symmetry_center(p);
  if (!center) return BolleFailure{BolleFailureReason::NotCentrallySymmetric, 0};

  const ConvexPolygon centered = p.translated(Vec2{-center->x, -center->y});
  const auto n = centered.size();

  // Condition 2 across all edges, remembering one interior witness per edge.
  std::vector<std::vector<Point2>> interior(n);
  std::vector<bool> midpoint_ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 mid = midpoint(centered.vertex(i), centered.vertex(i + 1));
    midpoint_ok[i] = is_half_lattice_point(mid, lattice);
    if (midpoint_ok[i]) continue;
    interior[i] = half_lattice_points_on_edge(centered.vertex(i), centered.vertex(i + 1), lattice);
    if (interior[i].empty()) return BolleFailure{BolleFailureReason::EdgeWithoutHalfLatticeInteriorPoint, i};
  }

  TilingCertificate cert;
  cert.center = *center;
  cert.justifications.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    EdgeJustification j;
    j.edge_index = i;
    j.edge_vector = centered.edge_vector(i);
    if (midpoint_ok[i]) {
      j.edge_case = EdgeCase::MidpointInHalfLattice;
      j.witness = midpoint(centered.vertex(i), centered.vertex(i + 1));
    } else {
      if (!lattice.contains(j.edge_vector))
        return BolleFailure{BolleFailureReason::MidpointNotHalfLatticeAndEdgeNotLatticeVector, i};
      j.edge_case = EdgeCase::LatticeVectorEdge;
      j.witness = interior[i].front();
    }
    cert.justifications.push_back(std::move(j));
  }

  const Rational k = area(p) / abs_of(lattice.det());
  if (!is_integer(k) || k <= 0)
    throw Error(ErrorKind::InternalInconsistency,
                "criterion holds but area/|det| = " + to_string(k) + " is not a positive integer");
  cert.k = to_int64(k.get_num());
  return cert;
}

std::int64_t multiplicity(const ConvexPolygon& p, const Lattice2& lattice) {
  const auto result = check_bolle(p, lattice);
  if (const auto* fail = std::get_if<BolleFailure>(&result))
    throw Error(ErrorKind::NotATile, to_string(fail->reason));
  return std::get<TilingCertificate>(result).k;
}

bool certificate_is_sound(const TilingCertificate& cert, const ConvexPolygon& p, const Lattice2& lattice) {
  if (cert.justifications.size() != p.size()) return false;
  if (area(p) != Rational(cert.k) * abs_of(lattice.det())) return false;
  const ConvexPolygon centered = p.translated(Vec2{-cert.center.x, -cert.center.y});
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& j = cert.justifications[i];
    const Point2& a = centered.vertex(i);
    const Point2& b = centered.vertex(i + 1);
    if (j.edge_index != i || !(j.edge_vector == b - a)) return false;
    if (!is_half_lattice_point(j.witness, lattice) || !strictly_between(a, b, j.witness)) return false;
    if (j.edge_case == EdgeCase::MidpointInHalfLattice && !(j.witness == midpoint(a, b))) return false;
    if (j.edge_case == EdgeCase::LatticeVectorEdge && !lattice.contains(j.edge_vector)) return false;
  }
  return true;
}

}  // namespace mlt
