#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "icover/rational.hpp"

using icover::Rational;
using icover::parse_rational;

TEST_CASE("construction reduces and normalizes the sign") {
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-4, 8) == Rational(-1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(16, 20) == Rational(4, 5));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(3, 4) < Rational(4, 5));
  CHECK_FALSE(Rational(1, 2) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1501, 2000) > Rational(3, 4));
  CHECK(Rational(151, 200) < Rational(16, 20));
  // Cross products near the 64-bit edge must not overflow.
  const std::int64_t big = 3'000'000'000;
  CHECK(Rational(big, big + 1) < Rational(big + 1, big + 2));
}

TEST_CASE("rendering") {
  CHECK(Rational(16, 20).str() == "4/5");
  CHECK(Rational(6, 2).str() == "3");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-3, 6).str() == "-1/2");
}

TEST_CASE("parsing fractions, integers, decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("2") == Rational(2, 1));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("1.") == Rational(1, 1));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational(" 1/2 ") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("floor_mul") {
  CHECK(icover::floor_mul(Rational(1, 2), 5) == 2);
  CHECK(icover::floor_mul(Rational(1, 1), 3) == 3);
  CHECK(icover::floor_mul(Rational(3, 10), 10) == 3);
  CHECK(icover::floor_mul(Rational(2, 3), 1) == 0);
  CHECK(icover::floor_mul(Rational(1, 2), 2000) == 1000);
}

TEST_CASE("ceil_div_mul computes ceil(a / (r*k))") {
  CHECK(icover::ceil_div_mul(3, Rational(1, 1), 2) == 2);
  CHECK(icover::ceil_div_mul(4, Rational(1, 2), 2) == 4);
  CHECK(icover::ceil_div_mul(20000, Rational(1, 2), 2000) == 20);
  CHECK(icover::ceil_div_mul(1, Rational(1, 1), 1) == 1);
  CHECK(icover::ceil_div_mul(0, Rational(1, 2), 3) == 0);
}
