#include <doctest.h>

#include "filiform/rng.hpp"
#include "filiform/scalar.hpp"

using namespace filiform;

TEST_CASE("field axioms on simple values") {
  CHECK("1/2"_q + "1/2"_q == Scalar(1));
  Scalar i(Rational(0), Rational(1));
  CHECK(i * i == Scalar(-1));
  Scalar z = "2+3i"_q;
  CHECK(z * inv(z) == Scalar(1));
  CHECK(z / z == Scalar(1));
}

TEST_CASE("randomized ring axioms") {
  Splitmix64 g(0x5ca1ab1eULL);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = rand_scalar(g), b = rand_scalar(g), c = rand_scalar(g);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * inv(a) == Scalar(1));
      CHECK(pow(a, -3) == inv(pow(a, 3)));
    }
  }
}

TEST_CASE("pow edge cases") {
  CHECK(pow(Scalar(0), 0) == Scalar(1));
  CHECK(pow("1/2"_q, 3) == "1/8"_q);
  CHECK(pow("-2"_q, 2) == Scalar(4));
  CHECK_THROWS_AS(pow(Scalar(0), -1), DivisionByZero);
  CHECK_THROWS_AS(inv(Scalar(0)), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("parse accepts the documented grammar") {
  CHECK(parse_scalar("-2") == Scalar(-2));
  CHECK(parse_scalar("1/3+2/5i") == Scalar(Rational(1, 3), Rational(2, 5)));
  CHECK(parse_scalar("0-1i") == Scalar(Rational(0), Rational(-1)));
  CHECK(parse_scalar("7/3") == Scalar(Rational(7, 3)));
  CHECK(parse_scalar("  4 ") == Scalar(4));
  CHECK(parse_scalar("2/4") == Scalar(Rational(1, 2)));  // canonicalized

  CHECK_THROWS_AS(parse_scalar("5/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+2"), ParseError);   // missing trailing i
  CHECK_THROWS_AS(parse_scalar("1+2j"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1i"), ParseError);    // imaginary needs a real head
  CHECK_THROWS_AS(parse_scalar("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_scalar("--3"), ParseError);
}

TEST_CASE("format/parse round trips") {
  Splitmix64 g(0xf00dULL);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar s = rand_scalar(g, 50, 20);
    CHECK(parse_scalar(format_scalar(s)) == s);
  }
  // format-parse-format is idempotent on valid text.
  for (const char* text : {"-2", "1/3+2/5i", "02/04", "+7", "3-1i"}) {
    std::string once = format_scalar(parse_scalar(text));
    std::string twice = format_scalar(parse_scalar(once));
    CHECK(once == twice);
  }
}
