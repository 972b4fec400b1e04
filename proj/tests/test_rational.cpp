#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "mapcount/rational.hpp"

using namespace mapcount;

TEST_CASE("construction normalizes to lowest terms, positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 2).numerator() == 3);
  CHECK(Rational(3, 2).denominator() == 2);
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
}

TEST_CASE("arithmetic") {
  const Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(a + (-a) == Rational(0));

  Rational c(2, 3);
  c += Rational(1, 3);
  CHECK(c == Rational(1));
  c *= Rational(-4);
  CHECK(c == Rational(-4));
  c /= Rational(8);
  CHECK(c == Rational(-1, 2));
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK(Rational(5, 4) > Rational(1));
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("integer detection") {
  CHECK(Rational(8, 4).is_integer());
  CHECK(Rational(8, 4).as_integer() == 2);
  CHECK(Rational(-9, 3).as_integer() == -3);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK_FALSE(Rational(1, 1000000).is_zero());
}

TEST_CASE("parse and str round trip") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("+3/2") == Rational(3, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("6/4") == Rational(3, 2));

  for (const Rational& v :
       {Rational(0), Rational(17), Rational(-5, 3), Rational(361, 13122)}) {
    CHECK(Rational::parse(v.str()) == v);
  }
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(-1, 7).str() == "-1/7");
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(-419, 52488).to_double() ==
        doctest::Approx(-0.00798277702).epsilon(1e-9));
}

TEST_CASE("pow") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(-2).pow(2) == Rational(4));
  // 12^-2000 underflows double but stays exact.
  const Rational tiny = Rational(1, 12).pow(2000);
  CHECK(tiny * Rational(12).pow(2000) == Rational(1));
}

TEST_CASE("exact_sqrt") {
  CHECK(Rational::exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(Rational::exact_sqrt(Rational(0)) == Rational(0));
  CHECK(Rational::exact_sqrt(Rational(1)) == Rational(1));
  CHECK(Rational::exact_sqrt(Rational(144)) == Rational(12));
  CHECK_FALSE(Rational::exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(Rational::exact_sqrt(Rational(4, 3)).has_value());
  CHECK_FALSE(Rational::exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("factorial and integer binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  // Pascal recurrence on a block.
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(Rational(1, 2), 0) == Rational(1));
  CHECK(binomial(Rational(1, 2), 1) == Rational(1, 2));
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(-1, 2), 3) == Rational(-5, 16));
  CHECK(binomial(Rational(3, 2), 2) == Rational(3, 8));
  // C(-1/2, k) = (-1/4)^k C(2k, k).
  for (int k = 0; k <= 10; ++k) {
    CHECK(binomial(Rational(-1, 2), k) ==
          Rational(-1, 4).pow(k) * Rational(binomial(2 * k, k)));
  }
  // Integer upper argument agrees with the integer routine.
  for (int k = 0; k <= 8; ++k)
    CHECK(binomial(Rational(6), k) == Rational(binomial(6, k)));
}
