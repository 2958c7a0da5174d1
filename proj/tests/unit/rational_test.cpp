#include "doctest.h"
#include "fgt/rational.hpp"

using fgt::Rational;

TEST_CASE("dyadic") {
  CHECK(fgt::dyadic(3, 2) == Rational(3, 4));
  CHECK(fgt::dyadic(0, 10) == Rational(0));
  CHECK(fgt::dyadic(34784, 16) == Rational(34784, 65536));
  CHECK(fgt::dyadic(1, 0) == Rational(1));
  CHECK(fgt::dyadic(4, 2) == Rational(1));
}

TEST_CASE("fraction rendering") {
  CHECK(fgt::to_fraction_string(Rational(0)) == "0/1");
  CHECK(fgt::to_fraction_string(Rational(1)) == "1/1");
  CHECK(fgt::to_fraction_string(Rational(3, 4)) == "3/4");
  CHECK(fgt::to_fraction_string(Rational(2, 8)) == "1/4");
  CHECK(fgt::to_fraction_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(fgt::to_decimal_string(Rational(1, 4)) == "0.2500");
  CHECK(fgt::to_decimal_string(Rational(1, 3)) == "0.3333");
  CHECK(fgt::to_decimal_string(Rational(2, 3)) == "0.6667");
  CHECK(fgt::to_decimal_string(Rational(0)) == "0.0000");
  CHECK(fgt::to_decimal_string(Rational(1)) == "1.0000");
  CHECK(fgt::to_decimal_string(Rational(1, 8), 2) == "0.13");
  CHECK(fgt::to_decimal_string(Rational(-1, 8), 2) == "-0.13");
  CHECK(fgt::to_decimal_string(Rational(1, 2), 0) == "1");
  CHECK(fgt::to_decimal_string(Rational(-1, 2), 0) == "-1");
  CHECK(fgt::to_decimal_string(Rational(1, 200), 2) == "0.01");
  CHECK(fgt::to_decimal_string(Rational(-1, 1000), 2) == "0.00");
}

TEST_CASE("decimal rendering of the reference figures") {
  CHECK(fgt::to_decimal_string(Rational(34784, 65536)) == "0.5308");
  CHECK(fgt::to_decimal_string(Rational(42303, 65536)) == "0.6455");
  CHECK(fgt::to_decimal_string(Rational(45678, 65536)) == "0.6970");
}
