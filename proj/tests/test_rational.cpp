#include <doctest.h>

#include <random>

#include "tribodyn/errors.hpp"
#include "tribodyn/rational.hpp"

using tribodyn::BigInt;
using tribodyn::Error;
using tribodyn::ErrorCode;
using tribodyn::Rational;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tribodyn::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0/1");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational().str() == "0/1");
  CHECK(Rational(BigInt(4), BigInt(2)).denominator() == 1);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3/4") == Rational(BigInt(3), BigInt(4)));
  CHECK(Rational::parse(" -10/4 ").str() == "-5/2");
  CHECK(Rational::parse("+7").str() == "7/1");
  CHECK(Rational::parse("2/-6").str() == "-1/3");
  CHECK(Rational::parse("123456789012345678901234567890/3").str() ==
        "41152263004115226300411522630/1");

  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::ZeroDenominator);
  CHECK(code_of([] { Rational::parse(""); }) == ErrorCode::Parse);
  CHECK(code_of([] { Rational::parse("1.5"); }) == ErrorCode::Parse);
  CHECK(code_of([] { Rational::parse("1/2/3"); }) == ErrorCode::Parse);
  CHECK(code_of([] { Rational::parse("a/b"); }) == ErrorCode::Parse);
  CHECK(code_of([] { Rational::parse("1 2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { Rational::parse("-"); }) == ErrorCode::Parse);
}

TEST_CASE("arithmetic and division by zero") {
  const Rational a = Rational::parse("1/3");
  const Rational b = Rational::parse("-1/6");
  CHECK((a + b).str() == "1/6");
  CHECK((a - b).str() == "1/2");
  CHECK((a * b).str() == "-1/18");
  CHECK((a / b).str() == "-2/1");
  CHECK((-a).str() == "-1/3");
  CHECK(b < a);
  CHECK(code_of([&] { (void)(a / Rational(0)); }) == ErrorCode::DivisionByZero);
  CHECK((a - a).is_zero());
  CHECK((a - a).str() == "0/1");
}

TEST_CASE("str/parse round trip on random fractions") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(BigInt(num(gen)), BigInt(den(gen)));
    const Rational back = Rational::parse(r.str());
    CHECK(back == r);
    CHECK(back.str() == r.str());
    CHECK(gcd(back.numerator(), back.denominator()) == 1);
    CHECK(back.denominator() > 0);
  }
}

TEST_CASE("digits") {
  CHECK(Rational::parse("12345/7").digits() >= 5);
  CHECK(Rational::parse("12345/7").digits() <= 6);
  CHECK(Rational(0).digits() == 1);
}
