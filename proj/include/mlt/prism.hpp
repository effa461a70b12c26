#pragma once

// Prisms P x I^(n-2) over a centrally symmetric polygon, their belts, and
// McMullen's parallelohedron test. Faces are kept combinatorial: a face of
// the product is a pair (face of the polygon, face of the cube).

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mlt/geometry.hpp"

namespace mlt {

inline constexpr int kDefaultDirectEnumerationLimit = 8;

class PrismPolytope {
 public:
  const ConvexPolygon& base() const { return base_; }
  int dimension() const { return n_; }
  int cube_axes() const { return n_ - 2; }

 private:
  friend PrismPolytope build_prism(const ConvexPolygon& base, int n);
  PrismPolytope(ConvexPolygon base, int n) : base_(std::move(base)), n_(n) {}

  ConvexPolygon base_;
  int n_;
};

// Base must be centrally symmetric about the origin. Throws
// NotCentrallySymmetric or DimensionTooSmall.
PrismPolytope build_prism(const ConvexPolygon& base, int n);

enum class PolygonPart { Whole, Edge, Vertex };

struct ProductFace {
  PolygonPart polygon_part = PolygonPart::Whole;
  std::size_t index = 0;  // edge or vertex index; unused for Whole
  // One entry per cube axis: 0 = free, +1 / -1 = fixed at +1/2 / -1/2.
  std::vector<std::int8_t> cube_signs;

  int dimension() const;
  friend bool operator==(const ProductFace&, const ProductFace&) = default;
};

std::string describe(const ProductFace& f);

struct Belt {
  ProductFace generator;
  std::vector<ProductFace> facets;
};

// Side facets (edge i x cube) in edge order, then cube-type facets
// (polygon x {x_axis = -1/2}, polygon x {x_axis = +1/2}) by axis.
std::vector<ProductFace> facets(const PrismPolytope& prism);

// One belt per translation class of (n-2)-faces, duplicates merged.
std::vector<Belt> belts(const PrismPolytope& prism);

struct Parallelohedron {};
struct NotParallelohedron {
  Belt offending_belt;
};
using McMullenVerdict = std::variant<Parallelohedron, NotParallelohedron>;

McMullenVerdict mcmullen_check(const PrismPolytope& prism);

// Number of l in Z^n with q in int(P) + l. Computes both the direct
// enumeration over Z^n (when n <= direct_limit) and the product of the planar
// count with one per cube axis, and throws InternalInconsistency if they
// differ. Throws NonGenericPoint if q lies on a translate boundary.
std::int64_t prism_covering_count_at(const PrismPolytope& prism, std::span<const Rational> q,
                                     int direct_limit = kDefaultDirectEnumerationLimit);

// Deterministic generic sample: odd prime denominators that do not divide any
// base vertex denominator; candidates on a translate edge are redrawn.
std::vector<Rational> generic_sample_point(const PrismPolytope& prism, std::uint64_t seed);

}  // namespace mlt
