#include <doctest.h>

#include "hv/errors.hpp"
#include "hv/parse.hpp"
#include "hv/scalar.hpp"
#include "oracles.hpp"

using namespace hv;

TEST_CASE("arithmetic examples") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) + i).inverse() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1, 0), DivisionByZero);
}

TEST_CASE("canonical form") {
  Scalar s(mpq_class(6, 4), mpq_class(-10, 20));
  CHECK(s.is_canonical());
  CHECK(s.re() == mpq_class(3, 2));
  CHECK(s.im().get_den() == 2);
  CHECK(Scalar(-4, -8) == Scalar(1, 2));
}

TEST_CASE("parse examples") {
  CHECK(parse_scalar("3/2") == Scalar(3, 2));
  CHECK(parse_scalar("(1-2i)") == Scalar(mpq_class(1), mpq_class(-2)));
  CHECK(parse_scalar("i") == Scalar::imaginary_unit());
  CHECK(parse_scalar("-1/2i") == Scalar(mpq_class(0), mpq_class(-1, 2)));
  CHECK(parse_scalar(" ( 2/4 + 3i ) ") == Scalar(mpq_class(1, 2), mpq_class(3)));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  try {
    parse_scalar("1/0");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_scalar("(1+2i"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2x"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("format and parse round-trip") {
  CHECK(format_scalar(Scalar(3, 2)) == "3/2");
  CHECK(format_scalar(Scalar::imaginary_unit()) == "i");
  CHECK(format_scalar(-Scalar::imaginary_unit()) == "-i");
  CHECK(format_scalar(Scalar(mpq_class(1), mpq_class(-2))) == "(1-2i)");
  CHECK(format_scalar(Scalar(0)) == "0");
  oracle::Random rnd(7);
  for (int k = 0; k < 500; ++k) {
    Scalar s = rnd.scalar();
    if (k % 3 == 0) s = rnd.rational(1000000);
    if (k % 5 == 0) s = rnd.rational(1000) * Scalar::imaginary_unit();
    CHECK(parse_scalar(format_scalar(s)) == s);
  }
}

TEST_CASE("field axioms on random values") {
  oracle::Random rnd(11);
  for (int k = 0; k < 300; ++k) {
    Scalar a = rnd.scalar(), b = rnd.scalar(), c = rnd.scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    for (const Scalar& r : {a + b, a * b, a - c, a * (b + c)}) CHECK(r.is_canonical());
    if (!b.is_zero()) CHECK((a / b).is_canonical());
  }
}

TEST_CASE("large index cubes stay exact") {
  mpz_class n = 1000;
  Scalar cube(mpq_class(n * n * n - n, 12));
  CHECK(cube == Scalar(83333250));
  mpz_class big("123456789012345678901234567890");
  Scalar s(mpq_class(big, 7));
  CHECK(s * Scalar(7) == Scalar(mpq_class(big)));
}
