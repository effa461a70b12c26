#include <algorithm>
#include <random>

#include "doctest.h"
#include "mlt/coverage.hpp"
#include "mlt/prism.hpp"
#include "mlt/search.hpp"
#include "test_support.hpp"

using namespace mlt;

namespace {

std::vector<std::size_t> belt_sizes(const PrismPolytope& prism) {
  std::vector<std::size_t> out;
  for (const auto& b : belts(prism)) out.push_back(b.facets.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Sizes from the product structure: one vertical belt with every side facet,
// one 4-belt per (edge direction, cube axis), one 4-belt per pair of axes.
std::vector<std::size_t> expected_belt_sizes(std::size_t edges, int n) {
  const auto axes = static_cast<std::size_t>(n - 2);
  std::vector<std::size_t> out{edges};
  out.resize(1 + edges / 2 * axes + axes * (axes - 1) / 2, 4);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

ConvexPolygon centered_square() { return mlt::test::poly({{"-1/2", "-1/2"}, {"1/2", "-1/2"}, {"1/2", "1/2"}, {"-1/2", "1/2"}}); }

ConvexPolygon centered(const ConvexPolygon& p) {
  const auto c = symmetry_center(p);
  REQUIRE(c.has_value());
  return p.translated(Vec2{-c->x, -c->y});
}

}  // namespace

TEST_CASE("build_prism preconditions") {
  const auto d8 = canonicalize(mlt::test::d8_table());
  CHECK(build_prism(d8, 3).dimension() == 3);
  CHECK(build_prism(d8, 3).cube_axes() == 1);
  try {
    build_prism(d8, 2);
    FAIL("n = 2 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooSmall);
  }
  try {
    build_prism(mlt::test::fixture("perturbed_d8.poly"), 3);
    FAIL("asymmetric base accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCentrallySymmetric);
  }
  CHECK_THROWS_AS(build_prism(mlt::test::unit_square(), 3), Error);
}

TEST_CASE("facet lists") {
  const auto d8 = canonicalize(mlt::test::d8_table());
  CHECK(facets(build_prism(d8, 3)).size() == 10);
  CHECK(facets(build_prism(centered_square(), 3)).size() == 6);
  const auto f = facets(build_prism(canonicalize(mlt::test::d10_table()), 4));
  CHECK(f.size() == 14);
  for (const auto& x : f) CHECK(x.dimension() == 3);
  CHECK(describe(f.front()) == "G0 x [I,I]");
  CHECK(describe(f.back()) == "P x [I,+]");
}

TEST_CASE("belt multisets") {
  const auto d8 = build_prism(canonicalize(mlt::test::d8_table()), 3);
  CHECK(belt_sizes(d8) == std::vector<std::size_t>{8, 4, 4, 4, 4});
  const auto cube = belt_sizes(build_prism(centered_square(), 3));
  CHECK(cube == std::vector<std::size_t>{4, 4, 4});
  CHECK(belt_sizes(build_prism(mlt::test::fixture("hexagon.poly"), 3)) == std::vector<std::size_t>{6, 4, 4, 4});
  CHECK(belt_sizes(build_prism(canonicalize(mlt::test::d8_table()), 4)) == expected_belt_sizes(8, 4));
}

TEST_CASE("belt generators have dimension n - 2 and belts have parallel pairs") {
  for (int n = 3; n <= 6; ++n) {
    const auto prism = build_prism(canonicalize(mlt::test::d10_table()), n);
    const auto all = facets(prism);
    std::vector<bool> covered(all.size(), false);
    for (const auto& b : belts(prism)) {
      CHECK(b.generator.dimension() == n - 2);
      CHECK(b.facets.size() % 2 == 0);
      for (const auto& f : b.facets) {
        const auto it = std::find(all.begin(), all.end(), f);
        REQUIRE(it != all.end());
        covered[static_cast<std::size_t>(it - all.begin())] = true;
      }
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }));
    CHECK(belt_sizes(prism) == expected_belt_sizes(10, n));
  }
}

TEST_CASE("McMullen verdicts") {
  const auto v8 = mcmullen_check(build_prism(canonicalize(mlt::test::d8_table()), 3));
  REQUIRE(std::holds_alternative<NotParallelohedron>(v8));
  CHECK(std::get<NotParallelohedron>(v8).offending_belt.facets.size() == 8);
  CHECK(std::get<NotParallelohedron>(v8).offending_belt.generator.polygon_part == PolygonPart::Vertex);
  CHECK(std::holds_alternative<Parallelohedron>(mcmullen_check(build_prism(centered_square(), 3))));
  CHECK(std::holds_alternative<Parallelohedron>(mcmullen_check(build_prism(mlt::test::fixture("hexagon.poly"), 3))));
  CHECK(std::holds_alternative<Parallelohedron>(mcmullen_check(build_prism(mlt::test::fixture("hexagon.poly"), 5))));
}

TEST_CASE("every symmetric polygon with at least eight edges lifts to a non-parallelohedron") {
  std::vector<ConvexPolygon> bases = {canonicalize(mlt::test::d8_table()), canonicalize(mlt::test::d10_table()),
                                      mlt::test::fixture("grs_octagon.poly")};
  for (std::uint64_t seed = 0; seed < 20; ++seed) bases.push_back(centered(random_cs_integer_polygon(seed, 4 + static_cast<int>(seed % 3), 3)));
  for (const auto& base : bases) {
    for (int n = 3; n <= 5; ++n) {
      const auto prism = build_prism(base, n);
      const auto sizes = belt_sizes(prism);
      CHECK(std::count(sizes.begin(), sizes.end(), base.size()) >= 1);
      const auto v = mcmullen_check(prism);
      REQUIRE(std::holds_alternative<NotParallelohedron>(v));
      CHECK(std::get<NotParallelohedron>(v).offending_belt.facets.size() == base.size());
    }
  }
}

TEST_CASE("covering counts at the sample points") {
  const auto d8 = build_prism(canonicalize(mlt::test::d8_table()), 3);
  CHECK(prism_covering_count_at(d8, rationals({"1/3", "1/7", "1/5"})) == 5);
  CHECK(prism_covering_count_at(build_prism(centered_square(), 3), rationals({"1/3", "1/3", "1/3"})) == 1);
  const auto d10 = build_prism(canonicalize(mlt::test::d10_table()), 4);
  CHECK(prism_covering_count_at(d10, rationals({"1/3", "1/7", "1/5", "1/11"})) == 5);
}

TEST_CASE("non-generic points are rejected") {
  const auto d8 = build_prism(canonicalize(mlt::test::d8_table()), 3);
  auto expect_kind = [&](std::vector<Rational> q, ErrorKind k) {
    try {
      prism_covering_count_at(d8, q);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == k);
    }
  };
  expect_kind(rationals({"1/3", "1/7", "1/2"}), ErrorKind::NonGenericPoint);
  expect_kind(rationals({"1/3", "1/7", "-5/2"}), ErrorKind::NonGenericPoint);
  expect_kind(rationals({"7/10", "0", "1/5"}), ErrorKind::NonGenericPoint);
  expect_kind(rationals({"1/3", "1/7"}), ErrorKind::ConfigInvalid);
}

TEST_CASE("product identity at generic points") {
  for (const auto& base : {canonicalize(mlt::test::d8_table()), mlt::test::fixture("grs_octagon.poly"),
                           mlt::test::fixture("hexagon.poly")}) {
    for (int n : {3, 4}) {
      const auto prism = build_prism(base, n);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto q = generic_sample_point(prism, seed);
        REQUIRE(q.size() == static_cast<std::size_t>(n));
        for (std::size_t i = 2; i < q.size(); ++i) CHECK(Integer(q[i].get_den()) % 2 != 0);
        const auto planar = covering_count_at(base, Lattice2::integer(), Point2{q[0], q[1]});
        CHECK(planar.boundary == 0);
        CHECK(prism_covering_count_at(prism, q) == planar.interior);
      }
    }
  }
}

TEST_CASE("generic samples are deterministic") {
  const auto prism = build_prism(canonicalize(mlt::test::d10_table()), 5);
  CHECK(generic_sample_point(prism, 9) == generic_sample_point(prism, 9));
  CHECK(generic_sample_point(prism, 9) != generic_sample_point(prism, 10));
}
