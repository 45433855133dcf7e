// SPDX-License-Identifier: Apache-2.0

#include "genocchi/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace genocchi;

TEST_CASE("rational canonical form") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");

  Rational s(0, 7);
  CHECK(s.is_zero());
  CHECK(s.to_string() == "0");

  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.pow(3) == Rational(1, 27));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing round trip") {
  CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
  CHECK(Rational::from_string("17") == Rational(17));
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(7, 0) == Rational(1));
  CHECK(binomial(4, 6) == Rational(0));  // k > n convention
  CHECK(binomial(40, 20) == Rational::from_string("137846528820"));
}

TEST_CASE("multinomial coefficients") {
  // n! / (j! (n-k)! (k-j)!)
  CHECK(multinomial(2, 1, 1, 0) == Rational(2));
  CHECK(multinomial(6, 2, 2, 2) == Rational(90));
  CHECK(multinomial(5, 1, 1, 1) == Rational(0));  // parts must sum to n
  CHECK(factorial(10) == Rational(3628800));
}
