// Copyright 2026 The Feller Lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "feller/rational.hpp"

namespace feller {
namespace {

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(3, 6) == make_rational(1, 2));
  CHECK(make_rational(-4, 8) == make_rational(-1, 2));
  CHECK(make_rational(2, -4) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts p/q and integers") {
  CHECK(parse_rational("1/2") == make_rational(1, 2));
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2 "), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
}

TEST_CASE("format_rational always prints p/q in lowest terms") {
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(1)) == "1/1");
  CHECK(format_rational(make_rational(-3, 2)) == "-3/2");
  CHECK(format_rational(make_rational(10, 4)) == "5/2");
  CHECK(format_rational(parse_rational("341/1024")) == "341/1024");
}

TEST_CASE("pow2 handles both signs") {
  CHECK(pow2(0) == Rational(1));
  CHECK(pow2(10) == Rational(1024));
  CHECK(pow2(-3) == make_rational(1, 8));
  CHECK(pow2(-40) * pow2(40) == Rational(1));
}

TEST_CASE("floor and frac") {
  CHECK(floor_int(make_rational(7, 2)) == 3);
  CHECK(floor_int(make_rational(-7, 2)) == -4);
  CHECK(floor_int(Rational(5)) == 5);
  CHECK(frac(make_rational(-1, 4)) == make_rational(3, 4));
  CHECK(frac(make_rational(9, 4)) == make_rational(1, 4));
  CHECK(frac(Rational(3)) == Rational(0));
}

TEST_CASE("abs and is_integer") {
  CHECK(abs(make_rational(-5, 3)) == make_rational(5, 3));
  CHECK(abs(make_rational(5, 3)) == make_rational(5, 3));
  CHECK(is_integer(Rational(4)));
  CHECK_FALSE(is_integer(make_rational(1, 2)));
}

TEST_CASE("format_real gives 12 significant digits and marks integers") {
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(0.0) == "0.0");
  CHECK(format_real(-2.0) == "-2.0");
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(1e-9) == "1e-09");
}

}  // namespace
}  // namespace feller
