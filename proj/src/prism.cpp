#include "mlt/prism.hpp"

#include <algorithm>
#include <random>

#include "mlt/coverage.hpp"

namespace mlt {

PrismPolytope build_prism(const ConvexPolygon& base, int n) {
  if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "prism dimension must be at least 3, got " + std::to_string(n));
  const auto c = symmetry_center(base);
  if (!c || !(*c == Point2{0, 0}))
    throw Error(ErrorKind::NotCentrallySymmetric, "prism base must be centrally symmetric about the origin");
  return PrismPolytope(base, n);
}

int ProductFace::dimension() const {
  int d = polygon_part == PolygonPart::Whole ? 2 : polygon_part == PolygonPart::Edge ? 1 : 0;
  for (auto s : cube_signs) d += s == 0 ? 1 : 0;
  return d;
}

std::string describe(const ProductFace& f) {
  std::string s;
  switch (f.polygon_part) {
    case PolygonPart::Whole: s = "P"; break;
    case PolygonPart::Edge: s = "G" + std::to_string(f.index); break;
    case PolygonPart::Vertex: s = "v" + std::to_string(f.index); break;
  }
  s += " x [";
  for (std::size_t i = 0; i < f.cube_signs.size(); ++i) {
    if (i) s += ",";
    s += f.cube_signs[i] == 0 ? "I" : f.cube_signs[i] > 0 ? "+" : "-";
  }
  return s + "]";
}

std::vector<ProductFace> facets(const PrismPolytope& prism) {
  const auto axes = static_cast<std::size_t>(prism.cube_axes());
  std::vector<ProductFace> out;
  for (std::size_t e = 0; e < prism.base().size(); ++e)
    out.push_back({PolygonPart::Edge, e, std::vector<std::int8_t>(axes, 0)});
  for (std::size_t a = 0; a < axes; ++a) {
    for (std::int8_t sign : {std::int8_t{-1}, std::int8_t{1}}) {
      std::vector<std::int8_t> signs(axes, 0);
      signs[a] = sign;
      out.push_back({PolygonPart::Whole, 0, std::move(signs)});
    }
  }
  return out;
}

namespace {

bool edges_are_translates(const ConvexPolygon& p, std::size_t i, std::size_t j) {
  const Vec2 a = p.edge_vector(i);
  const Vec2 b = p.edge_vector(j);
  return a == b || a == -b;
}

// Free axes of `inner` are a subset of the free axes of `outer`.
bool cube_contains_translate(const std::vector<std::int8_t>& outer, const std::vector<std::int8_t>& inner) {
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (inner[i] == 0 && outer[i] != 0) return false;
  }
  return true;
}

bool contains_translate(const ConvexPolygon& p, const ProductFace& facet, const ProductFace& gen) {
  if (!cube_contains_translate(facet.cube_signs, gen.cube_signs)) return false;
  switch (facet.polygon_part) {
    case PolygonPart::Whole: return true;
    case PolygonPart::Edge:
      if (gen.polygon_part == PolygonPart::Vertex) return true;
      if (gen.polygon_part == PolygonPart::Edge) return edges_are_translates(p, facet.index, gen.index);
      return false;
    case PolygonPart::Vertex: return gen.polygon_part == PolygonPart::Vertex;
  }
  return false;
}

}  // namespace

std::vector<Belt> belts(const PrismPolytope& prism) {
  const ConvexPolygon& p = prism.base();
  const auto axes = static_cast<std::size_t>(prism.cube_axes());

  // Representatives of the translation classes of (n-2)-faces.
  std::vector<ProductFace> generators;
  generators.push_back({PolygonPart::Vertex, 0, std::vector<std::int8_t>(axes, 0)});
  std::vector<std::size_t> edge_reps;
  for (std::size_t e = 0; e < p.size(); ++e) {
    const bool seen = std::any_of(edge_reps.begin(), edge_reps.end(),
                                  [&](std::size_t r) { return edges_are_translates(p, r, e); });
    if (!seen) edge_reps.push_back(e);
  }
  for (auto e : edge_reps) {
    for (std::size_t a = 0; a < axes; ++a) {
      std::vector<std::int8_t> signs(axes, 0);
      signs[a] = 1;
      generators.push_back({PolygonPart::Edge, e, std::move(signs)});
    }
  }
  for (std::size_t a = 0; a < axes; ++a) {
    for (std::size_t b = a + 1; b < axes; ++b) {
      std::vector<std::int8_t> signs(axes, 0);
      signs[a] = 1;
      signs[b] = 1;
      generators.push_back({PolygonPart::Whole, 0, std::move(signs)});
    }
  }

  const std::vector<ProductFace> all_facets = facets(prism);
  std::vector<Belt> out;
  for (auto& g : generators) {
    Belt belt{g, {}};
    for (const auto& f : all_facets) {
      if (contains_translate(p, f, g)) belt.facets.push_back(f);
    }
    const bool duplicate =
        std::any_of(out.begin(), out.end(), [&](const Belt& b) { return b.facets == belt.facets; });
    if (!duplicate) out.push_back(std::move(belt));
  }
  return out;
}

McMullenVerdict mcmullen_check(const PrismPolytope& prism) {
  for (auto& b : belts(prism)) {
    if (b.facets.size() != 4 && b.facets.size() != 6) return NotParallelohedron{std::move(b)};
  }
  return Parallelohedron{};
}

namespace {

bool on_cube_boundary(const Rational& x) { return is_integer(Rational(x - Rational(1, 2))); }

}  // namespace

std::int64_t prism_covering_count_at(const PrismPolytope& prism, std::span<const Rational> q, int direct_limit) {
  const int n = prism.dimension();
  if (static_cast<int>(q.size()) != n)
    throw Error(ErrorKind::ConfigInvalid, "sample point has " + std::to_string(q.size()) + " coordinates, expected " +
                                              std::to_string(n));
  const auto axes = static_cast<std::size_t>(prism.cube_axes());
  const std::span<const Rational> cube_q = q.subspan(2);
  for (const auto& x : cube_q) {
    if (on_cube_boundary(x)) throw Error(ErrorKind::NonGenericPoint, "cube coordinate " + to_string(x) + " is on a boundary");
  }
  const Point2 planar{q[0], q[1]};
  const CoverageCount base = covering_count_at(prism.base(), Lattice2::integer(), planar);
  if (base.boundary != 0) throw Error(ErrorKind::NonGenericPoint, "planar projection lies on a translate edge");

  std::int64_t product = base.interior;
  for (const auto& x : cube_q) {
    std::int64_t hits = 0;
    for (auto a = to_int64(ceil_of(x - Rational(1, 2))); a <= to_int64(floor_of(x + Rational(1, 2))); ++a) {
      if (abs_of(x - a) < Rational(1, 2)) ++hits;
    }
    product *= hits;
  }
  if (n > direct_limit) return product;

  // Direct enumeration of the box of candidate lattice vectors in Z^n.
  const Rect box = bounding_box(prism.base());
  std::vector<std::int64_t> lo(static_cast<std::size_t>(n));
  std::vector<std::int64_t> hi(static_cast<std::size_t>(n));
  lo[0] = to_int64(ceil_of(q[0] - box.xmax));
  hi[0] = to_int64(floor_of(q[0] - box.xmin));
  lo[1] = to_int64(ceil_of(q[1] - box.ymax));
  hi[1] = to_int64(floor_of(q[1] - box.ymin));
  for (std::size_t i = 0; i < axes; ++i) {
    lo[i + 2] = to_int64(ceil_of(cube_q[i] - Rational(1, 2)));
    hi[i + 2] = to_int64(floor_of(cube_q[i] + Rational(1, 2)));
  }

  std::int64_t direct = 0;
  std::vector<std::int64_t> lambda = lo;
  while (true) {
    bool inside = point_location(prism.base(), Point2{q[0] - lambda[0], q[1] - lambda[1]}) == Location::Interior;
    for (std::size_t i = 2; inside && i < lambda.size(); ++i) inside = abs_of(q[i] - lambda[i]) < Rational(1, 2);
    if (inside) ++direct;

    std::size_t d = 0;
    while (d < lambda.size() && lambda[d] == hi[d]) {
      lambda[d] = lo[d];
      ++d;
    }
    if (d == lambda.size()) break;
    ++lambda[d];
  }

  if (direct != product)
    throw Error(ErrorKind::InternalInconsistency,
                "direct count " + std::to_string(direct) + " differs from product count " + std::to_string(product));
  return direct;
}

std::vector<Rational> generic_sample_point(const PrismPolytope& prism, std::uint64_t seed) {
  static constexpr long kPrimes[] = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::vector<long> primes;
  for (long pr : kPrimes) {
    const bool divides = std::any_of(prism.base().vertices().begin(), prism.base().vertices().end(), [&](const Point2& v) {
      return mpz_divisible_ui_p(v.x.get_den_mpz_t(), pr) || mpz_divisible_ui_p(v.y.get_den_mpz_t(), pr);
    });
    if (!divides) primes.push_back(pr);
  }
  if (primes.empty()) throw Error(ErrorKind::GenerationFailed, "no usable denominators");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  const auto n = static_cast<std::size_t>(prism.dimension());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> q;
    for (std::size_t i = 0; i < n; ++i) {
      const long pr = primes[pick(rng)];
      std::uniform_int_distribution<long> num(1, pr - 1);
      q.push_back(make_rational(num(rng), pr));
    }
    if (covering_count_at(prism.base(), Lattice2::integer(), Point2{q[0], q[1]}).boundary == 0) return q;
  }
  throw Error(ErrorKind::GenerationFailed, "could not draw a generic point");
}

}  // namespace mlt
