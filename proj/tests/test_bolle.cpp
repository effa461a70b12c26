#include <algorithm>
#include <random>

#include "doctest.h"
#include "mlt/bolle.hpp"
#include "mlt/coverage.hpp"
#include "mlt/search.hpp"
#include "test_support.hpp"

using namespace mlt;
using mlt::test::P;

namespace {

// Every point of L/2 strictly inside segment ab, by scanning a box of
// half-integer lattice coordinates.
std::vector<Point2> brute_half_points(const Point2& a, const Point2& b, const Lattice2& l) {
  const Point2 ca = l.to_coords(a);
  const Point2 cb = l.to_coords(b);
  const auto lo_x = floor_of(2 * std::min(ca.x, cb.x)), hi_x = ceil_of(2 * std::max(ca.x, cb.x));
  const auto lo_y = floor_of(2 * std::min(ca.y, cb.y)), hi_y = ceil_of(2 * std::max(ca.y, cb.y));
  const Vec2 d = b - a;
  std::vector<Point2> out;
  for (Integer i = lo_x; i <= hi_x; ++i) {
    for (Integer j = lo_y; j <= hi_y; ++j) {
      const Point2 h = l.from_coords(Point2{Rational(i) / 2, Rational(j) / 2});
      const Vec2 w = h - a;
      if (cross(d, w) != 0) continue;
      const Rational t = (w.x * d.x + w.y * d.y) / (d.x * d.x + d.y * d.y);
      if (t > 0 && t < 1) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Point2& p, const Point2& q) {
    const Vec2 wp = p - a, wq = q - a;
    return wp.x * d.x + wp.y * d.y < wq.x * d.x + wq.y * d.y;
  });
  return out;
}

ConvexPolygon apply(const ConvexPolygon& p, int a, int b, int c, int d) {
  std::vector<Point2> v;
  for (const auto& x : p.vertices()) v.push_back({a * x.x + b * x.y, c * x.x + d * x.y});
  return canonicalize(v);
}

Lattice2 random_lattice(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  while (true) {
    const Vec2 b1{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    const Vec2 b2{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    if (cross(b1, b2) != 0) return Lattice2(b1, b2);
  }
}

TilingCertificate cert_of(const BolleResult& r) {
  REQUIRE(std::holds_alternative<TilingCertificate>(r));
  return std::get<TilingCertificate>(r);
}

BolleFailure failure_of(const BolleResult& r) {
  REQUIRE(std::holds_alternative<BolleFailure>(r));
  return std::get<BolleFailure>(r);
}

ConvexPolygon cond3_hexagon() {
  return mlt::test::poly({{"-3/4", "-3/2"}, {"3/2", "-3/2"}, {"3/2", "0"}, {"3/4", "3/2"}, {"-3/2", "3/2"}, {"-3/2", "0"}});
}

}  // namespace

TEST_CASE("half-lattice points on an edge") {
  const auto z = Lattice2::integer();
  CHECK(half_lattice_points_on_edge(P("-1", "0"), P("1", "0"), z) ==
        mlt::test::points({{"-1/2", "0"}, {"0", "0"}, {"1/2", "0"}}));
  CHECK(half_lattice_points_on_edge(P("1", "0"), P("-1", "0"), z) ==
        mlt::test::points({{"1/2", "0"}, {"0", "0"}, {"-1/2", "0"}}));
  CHECK(half_lattice_points_on_edge(P("1/4", "1/4"), P("-1/4", "1/4"), z).empty());
  CHECK(half_lattice_points_on_edge(P("0", "0"), P("1", "2"), z) == mlt::test::points({{"1/2", "1"}}));
  CHECK(half_lattice_points_on_edge(P("0", "0"), P("1/2", "1/2"), z).empty());
}

TEST_CASE("half-lattice points agree with a brute-force scan") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  for (int i = 0; i < 400; ++i) {
    const Lattice2 l = i % 3 == 0 ? Lattice2::integer() : random_lattice(rng);
    Point2 a{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    Point2 b{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    if (i % 2 == 0) {
      // Force a half-lattice anchor so the edge is likely to hit points.
      a = l.from_coords(Point2{make_rational(num(rng), 2), make_rational(num(rng), 2)});
      b = l.from_coords(Point2{make_rational(num(rng), 2), make_rational(num(rng), 2)});
    }
    if (a == b) continue;
    CHECK(half_lattice_points_on_edge(a, b, l) == brute_half_points(a, b, l));
  }
}

TEST_CASE("five-fold octagon certificate") {
  const auto d8 = canonicalize(mlt::test::d8_table());
  const auto& cert = cert_of(check_bolle(d8, Lattice2::integer()));
  CHECK(cert.k == 5);
  CHECK(cert.center == Point2{0, 0});
  REQUIRE(cert.justifications.size() == 8);
  int midpoint_edges = 0;
  for (const auto& j : cert.justifications) {
    if (j.edge_case == EdgeCase::MidpointInHalfLattice) {
      ++midpoint_edges;
    } else {
      CHECK((j.edge_vector == Vec2{1, 0} || j.edge_vector == Vec2{-1, 0}));
    }
  }
  CHECK(midpoint_edges == 6);
  CHECK(certificate_is_sound(cert, d8, Lattice2::integer()));
  CHECK(multiplicity(d8, Lattice2::integer()) == 5);
}

TEST_CASE("decagon and integer octagon certificates") {
  const auto d10 = canonicalize(mlt::test::d10_table());
  const auto& c10 = cert_of(check_bolle(d10, Lattice2::integer()));
  CHECK(c10.k == 5);
  CHECK(c10.justifications.size() == 10);
  CHECK(certificate_is_sound(c10, d10, Lattice2::integer()));

  const auto grs = canonicalize(mlt::test::grs_table());
  const auto& c7 = cert_of(check_bolle(grs, Lattice2::integer()));
  CHECK(c7.k == 7);
  CHECK(c7.center == P("3/2", "3/2"));
  CHECK(certificate_is_sound(c7, grs, Lattice2::integer()));
  CHECK(multiplicity(mlt::test::fixture("grs_octagon.poly"), Lattice2::integer()) == 7);
}

TEST_CASE("failure reasons") {
  const auto z = Lattice2::integer();
  CHECK(failure_of(check_bolle(mlt::test::fixture("perturbed_d8.poly"), z)).reason ==
        BolleFailureReason::NotCentrallySymmetric);
  CHECK(failure_of(check_bolle(mlt::test::poly({{"0", "0"}, {"1", "0"}, {"0", "1"}}), z)).reason ==
        BolleFailureReason::NotCentrallySymmetric);
  CHECK(failure_of(check_bolle(mlt::test::fixture("small_square.poly"), z)).reason ==
        BolleFailureReason::EdgeWithoutHalfLatticeInteriorPoint);
  const auto& f = failure_of(check_bolle(cond3_hexagon(), z));
  CHECK(f.reason == BolleFailureReason::MidpointNotHalfLatticeAndEdgeNotLatticeVector);
  CHECK(f.edge_index == 0);
  try {
    multiplicity(mlt::test::fixture("small_square.poly"), z);
    FAIL("multiplicity of a non-tile");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATile);
  }
}

TEST_CASE("criterion verdicts match the sweep on the fixed examples") {
  const auto z = Lattice2::integer();
  for (const auto& p : {mlt::test::fixture("perturbed_d8.poly"), mlt::test::fixture("small_square.poly"),
                        cond3_hexagon()}) {
    const auto rep = slab_sweep_verify(p, z);
    CHECK(rep.min_multiplicity < rep.max_multiplicity);
  }
}

TEST_CASE("verdict is invariant under translation") {
  const auto d8 = canonicalize(mlt::test::d8_table());
  const auto z = Lattice2::integer();
  for (const Vec2 t : {Vec2{Rational(1, 3), Rational(-7, 5)}, Vec2{5, 2}, Vec2{Rational(1, 2), 0}}) {
    const auto& c = cert_of(check_bolle(d8.translated(t), z));
    CHECK(c.k == 5);
    CHECK(c.center == Point2{t.x, t.y});
    CHECK(certificate_is_sound(c, d8.translated(t), z));
  }
}

TEST_CASE("verdict is invariant under unimodular maps") {
  const int maps[][4] = {{1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}, {1, 0, 3, 1}, {-1, 0, 0, 1}};
  const auto z = Lattice2::integer();
  for (const auto& p : {canonicalize(mlt::test::d8_table()), canonicalize(mlt::test::d10_table()),
                        mlt::test::fixture("small_square.poly"), cond3_hexagon()}) {
    const auto base = check_bolle(p, z);
    for (const auto& m : maps) {
      const auto r = check_bolle(apply(p, m[0], m[1], m[2], m[3]), z);
      REQUIRE(r.index() == base.index());
      if (const auto* c = std::get_if<TilingCertificate>(&r)) {
        CHECK(c->k == std::get<TilingCertificate>(base).k);
      } else {
        CHECK(std::get<BolleFailure>(r).reason == std::get<BolleFailure>(base).reason);
      }
    }
  }
}

TEST_CASE("general lattice agrees with normalized integer lattice") {
  std::mt19937_64 rng(23);
  const std::vector<ConvexPolygon> shapes = {canonicalize(mlt::test::d8_table()), mlt::test::fixture("small_square.poly"),
                                             cond3_hexagon(), mlt::test::fixture("hexagon.poly")};
  for (int i = 0; i < 40; ++i) {
    const Lattice2 l = random_lattice(rng);
    const auto& shape = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const auto p = from_integer_lattice(shape, l);
    const auto a = check_bolle(p, l);
    const auto b = check_bolle(shape, Lattice2::integer());
    REQUIRE(a.index() == b.index());
    if (const auto* c = std::get_if<TilingCertificate>(&a)) {
      CHECK(c->k == std::get<TilingCertificate>(b).k);
      CHECK(certificate_is_sound(*c, p, l));
    } else {
      CHECK(std::get<BolleFailure>(a).reason == std::get<BolleFailure>(b).reason);
    }
  }
}

TEST_CASE("random symmetric integer polygons are certified with k = area") {
  const auto z = Lattice2::integer();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto p = random_cs_integer_polygon(seed, 2 + static_cast<int>(seed % 5), 2);
    const auto& c = cert_of(check_bolle(p, z));
    CHECK(Rational(c.k) == area(p));
    CHECK(certificate_is_sound(c, p, z));
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto d8 = canonicalize(mlt::test::d8_table());
  const auto z = Lattice2::integer();
  auto cert = cert_of(check_bolle(d8, z));
  auto bad_k = cert;
  bad_k.k = 4;
  CHECK_FALSE(certificate_is_sound(bad_k, d8, z));
  auto bad_witness = cert;
  bad_witness.justifications[0].witness = P("100", "100");
  CHECK_FALSE(certificate_is_sound(bad_witness, d8, z));
  auto missing = cert;
  missing.justifications.pop_back();
  CHECK_FALSE(certificate_is_sound(missing, d8, z));
}
