#pragma once

// Independent, exact verification of the covering multiplicity of P + L.
//
// Nothing in this module consults the Bolle criterion. It counts translates
// directly, so it serves as the ground truth the criterion is tested against.

#include <cstdint>
#include <vector>

#include "mlt/geometry.hpp"

namespace mlt {

struct CoverageCount {
  std::int64_t interior = 0;  // translates whose interior contains q
  std::int64_t boundary = 0;  // translates whose boundary contains q

  friend bool operator==(const CoverageCount&, const CoverageCount&) = default;
};

// Lattice point a*b1 + b*b2, stored by its integer coefficients.
struct LatticeOffset {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const LatticeOffset&, const LatticeOffset&) = default;
};

struct TranslateSet {
  Rect region;
  std::vector<LatticeOffset> offsets;  // sorted
};

struct CoverageReport {
  std::int64_t min_multiplicity = 0;
  std::int64_t max_multiplicity = 0;
  std::size_t cells_examined = 0;
  Point2 witness_min;
  Point2 witness_max;
};

CoverageCount covering_count_at(const ConvexPolygon& p, const Lattice2& lattice, const Point2& q);

// Every lattice offset whose translate meets the closed region (given in the
// same frame as P). `extra_rings` widens the candidate box before the exact
// filter; the result must not depend on it.
TranslateSet collect_translates(const ConvexPolygon& p, const Lattice2& lattice, const Rect& region,
                                int extra_rings = 0);

// Samples one representative per cell of the translate-edge arrangement over
// the fundamental domain [0,1]^2 of the normalized lattice and reports the
// extreme interior counts. Witnesses are in the frame of P. Slabs are
// evaluated in parallel; the result is independent of scheduling.
CoverageReport slab_sweep_verify(const ConvexPolygon& p, const Lattice2& lattice);

// Serial reference for slab_sweep_verify: all-pairs event computation and a
// full covering_count_at per representative. Slow; kept for cross-checking.
CoverageReport slab_sweep_verify_serial(const ConvexPolygon& p, const Lattice2& lattice);

// True iff the sweep reports min == max == k and area(P) == k * |det L|.
bool verify_k_fold(const ConvexPolygon& p, const Lattice2& lattice, std::int64_t k);

}  // namespace mlt
