#include "hk/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hk;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-5/2") == make_rational(-5, 2));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("0/9") == 0);
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(make_rational(-35, 6)) == "-35/6");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_fraction_string(make_rational(4, 2)) == "2/1");
  CHECK(to_long(Rational(-12)) == -12);
  CHECK(is_integer(make_rational(10, 5)));
}
