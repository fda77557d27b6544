#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liegeo/rational.hpp"

using namespace liegeo;

TEST_CASE("values are always reduced with positive denominator") {
  const Rational q(6, 8);
  CHECK(numerator(q) == 3);
  CHECK(denominator(q) == 4);

  // sign normalization happens through arithmetic
  const Rational neg = Rational(1) / Rational(-2);
  CHECK(numerator(neg) == -1);
  CHECK(denominator(neg) == 2);

  CHECK(Rational(0, 7) == 0);
  CHECK(denominator(Rational(0, 7)) == 1);
  CHECK(denominator(Rational(3, 9) - Rational(1, 3)) == 1);
}

TEST_CASE("arithmetic is exact at large magnitudes") {
  Rational q(1, 3);
  for (int i = 0; i < 200; ++i) q = q * Rational(10, 7) + Rational(1, 11);
  Rational back = q;
  for (int i = 0; i < 200; ++i) back = (back - Rational(1, 11)) * Rational(7, 10);
  CHECK(back == Rational(1, 3));
}

TEST_CASE("parse accepts sign, integer, optional positive denominator") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-4/7") == Rational(-4, 7));
  CHECK(parse_rational("+2/5") == Rational(2, 5));
  CHECK(parse_rational("0/9") == Rational(0));
  CHECK(parse_rational("123456789123456789123456789/2") ==
        Rational(BigInt("123456789123456789123456789"), 2));
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "/3", "1/", "1/0", "1/-2", "1/2/3", "a", "1 /2", "2.5", "--1"})
    CHECK_FALSE(parse_rational(bad).has_value());
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(Rational(16, 5)) == "16/5");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(10) / Rational(-4)) == "-5/2");
  for (const char* text : {"16/5", "-4", "0", "7/3"})
    CHECK(to_string(*parse_rational(text)) == text);
}
