#include "doctest.h"
#include "mlt/coverage.hpp"
#include "mlt/svg.hpp"
#include "test_support.hpp"

using namespace mlt;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("square grid patch") {
  const Rect patch{0, 2, 0, 2};
  const auto r = render_svg(mlt::test::unit_square(), Lattice2::integer(), patch);
  // Offsets -1..2 in each direction touch the closed patch.
  CHECK(r.translates == 16);
  CHECK(count_of(r.svg, "<polygon ") == 16);
  CHECK(r.svg.starts_with("<?xml"));
  CHECK(r.svg.find("viewBox=\"0.000000 -2.000000 2.000000 2.000000\"") != std::string::npos);
  CHECK(r.svg.find("fill-opacity=\"0.18\"") != std::string::npos);
  CHECK(r.svg.find("points=\"0.000000,0.000000 1.000000,0.000000 1.000000,-1.000000 0.000000,-1.000000\"") != std::string::npos);
}

TEST_CASE("octagon patch") {
  const auto d8 = canonicalize(mlt::test::d8_table());
  const Rect patch{-3, 3, -3, 3};
  const auto r = render_svg(d8, Lattice2::integer(), patch);
  CHECK(r.translates >= 25);
  CHECK(r.translates == collect_translates(d8, Lattice2::integer(), patch).offsets.size());
  CHECK(count_of(r.svg, "<polygon ") == r.translates);
  CHECK(r.svg.find("-1.300000,2.000000") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const auto d10 = canonicalize(mlt::test::d10_table());
  const Rect patch{-2, 2, -1, 1};
  const Lattice2 l(Vec2{1, 0}, Vec2{Rational(1, 2), 1});
  CHECK(render_svg(d10, l, patch).svg == render_svg(d10, l, patch).svg);
}
