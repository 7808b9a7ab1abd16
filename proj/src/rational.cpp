#include "tribodyn/rational.hpp"

#include <cctype>

#include "tribodyn/errors.hpp"

namespace tribodyn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// mpz_set_str tolerates embedded whitespace, so the digits are checked first.
BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
  if (!ok) {
    throw Error(ErrorCode::Parse, "not a rational: \"" + std::string(whole) + "\"");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text), BigInt(1));
  BigInt num = parse_integer(s.substr(0, slash), text);
  BigInt den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::ZeroDenominator, "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::digits() const {
  // mpz_sizeinbase may overshoot by one; exactness is not needed for a cap.
  const std::size_t n = mpz_sizeinbase(value_.get_num_mpz_t(), 10);
  const std::size_t d = mpz_sizeinbase(value_.get_den_mpz_t(), 10);
  return n > d ? n : d;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace tribodyn
