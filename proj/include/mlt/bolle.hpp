#pragma once

// Bolle's criterion for multiple lattice tiles in the plane.
//
// A convex polygon P is a k-fold lattice tile for a lattice L (some k >= 1)
// exactly when
//   1. P is centrally symmetric;
//   2. with P centered at the origin, every edge has a point of L/2 in its
//      relative interior;
//   3. every edge whose midpoint is not in L/2 is itself a vector of L.
// The multiplicity is then area(P) / |det L|.

#include <cstdint>
#include <variant>
#include <vector>

#include "mlt/geometry.hpp"

namespace mlt {

enum class EdgeCase { MidpointInHalfLattice, LatticeVectorEdge };

const char* to_string(EdgeCase c);

struct EdgeJustification {
  std::size_t edge_index = 0;
  EdgeCase edge_case = EdgeCase::MidpointInHalfLattice;
  // A point of L/2 in the edge's relative interior, in centered coordinates.
  Point2 witness;
  Vec2 edge_vector;
};

struct TilingCertificate {
  std::int64_t k = 0;
  // Symmetry center of the input; edges are tested on P - center.
  Point2 center;
  std::vector<EdgeJustification> justifications;
};

enum class BolleFailureReason {
  NotCentrallySymmetric,
  EdgeWithoutHalfLatticeInteriorPoint,
  MidpointNotHalfLatticeAndEdgeNotLatticeVector,
};

const char* to_string(BolleFailureReason r);

struct BolleFailure {
  BolleFailureReason reason = BolleFailureReason::NotCentrallySymmetric;
  // Meaningful for the two per-edge reasons.
  std::size_t edge_index = 0;
};

using BolleResult = std::variant<TilingCertificate, BolleFailure>;

// All points of L/2 strictly between a and b, ordered from a towards b.
std::vector<Point2> half_lattice_points_on_edge(const Point2& a, const Point2& b, const Lattice2& lattice);

// Conditions are checked in order: symmetry, then condition 2 over every edge,
// then condition 3 over every edge. The first failing edge is reported.
BolleResult check_bolle(const ConvexPolygon& p, const Lattice2& lattice);

// area(P)/|det L| for a polygon that passes check_bolle; throws Error(NotATile) otherwise.
std::int64_t multiplicity(const ConvexPolygon& p, const Lattice2& lattice);

// Re-validates every witness of a certificate against P and L.
bool certificate_is_sound(const TilingCertificate& cert, const ConvexPolygon& p, const Lattice2& lattice);

}  // namespace mlt
