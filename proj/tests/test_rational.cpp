#include "doctest.h"
#include "mlt/error.hpp"
#include "mlt/rational.hpp"

using namespace mlt;

TEST_CASE("parse_rational accepts integers and fractions in lowest terms") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/10") == Rational(-3, 10));
  CHECK(parse_rational("+4/8") == Rational(1, 2));
  CHECK(parse_rational("4/8").get_den() == 2);
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "--1", "1 /2", "6/-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("to_string is exact") {
  CHECK(to_string(Rational(-13, 10)) == "-13/10");
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("to_decimal rounds with integer arithmetic") {
  CHECK(to_decimal(Rational(1, 3), 6) == "0.333333");
  CHECK(to_decimal(Rational(2, 3), 6) == "0.666667");
  CHECK(to_decimal(Rational(-13, 10), 6) == "-1.300000");
  CHECK(to_decimal(Rational(-1, 10000000), 6) == "0.000000");
  CHECK(to_decimal(Rational(5), 0) == "5");
}

TEST_CASE("floor, ceil and half-integrality") {
  CHECK(floor_of(Rational(-3, 10)) == -1);
  CHECK(ceil_of(Rational(-3, 10)) == 0);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(is_half_integer_multiple(Rational(-3, 2)));
  CHECK_FALSE(is_half_integer_multiple(Rational(1, 4)));
  CHECK(is_integer(make_rational(4, 2)));
}
