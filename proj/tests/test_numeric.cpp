#include "doctest.h"
#include "fewnomial/numeric.hpp"

using namespace fewnomial;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("42") == 42);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("10.3") == Rational(103, 10));
  CHECK(parse_rational("1.0791") == Rational(10791, 10000));
  CHECK(parse_rational("1e-12") == Rational(1, 1000000000000LL));
  CHECK(parse_rational("2.5E3") == 2500);
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("007") == 7);
  for (const char* bad : {"", "-", "1/0", "abc", "1.2.3", "1e", "3/x", "1e1234567"})
    CHECK_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-8, 2)) == "-4");
  CHECK(parse_rational(to_string(Rational(-355, 113))) == Rational(-355, 113));
}

TEST_CASE("precision handling") {
  const Real x = to_real(Rational(1, 3), 300);
  CHECK(precision_bits(x) == 300);
  CHECK(precision_bits(with_precision(x, 80)) == 80);
  CHECK(precision_bits(x * x) >= 300);
  CHECK(to_string(to_real(Rational(1, 3), 200), 10) == to_string(to_real(Rational(1, 3), 200), 10));
}

TEST_CASE("exact powers and rounding") {
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_int(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow_int(Rational(0), -1), Error);
  CHECK(pow_int(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(is_integer(Rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
}

TEST_CASE("error codes have names") {
  CHECK(to_string(ErrorCode::ParseError) == "ParseError");
  const Error e(ErrorCode::NotSquare, "x");
  CHECK(e.code() == ErrorCode::NotSquare);
}
