#include "doctest.h"
#include "kaharm/errors.hpp"
#include "kaharm/rational.hpp"

using namespace kaharm;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational(" 1/2 ") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("format_rational round-trips") {
  for (const Rational& x : {Rational(0), Rational(5), Rational(-3, 7), Rational(22, 6)}) {
    CHECK(parse_rational(format_rational(x)) == x);
  }
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("floor_to_int") {
  CHECK(floor_to_int(Rational(7, 2)) == 3);
  CHECK(floor_to_int(Rational(-7, 2)) == -4);
  CHECK(floor_to_int(Rational(-4)) == -4);
}

TEST_CASE("GaussianRational arithmetic is exact") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(Rational(1, 2), Rational(3));
  const GaussianRational w(Rational(-2), Rational(1, 3));
  CHECK((z * w) / w == z);
  CHECK(z - z == GaussianRational(0));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).imag() == 0);
  CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
  CHECK(z.to_complex() == std::complex<double>(0.5, 3.0));
}
