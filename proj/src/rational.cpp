#include "monty/rational.hpp"

#include <cctype>

#include "monty/error.hpp"

namespace monty {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(Errc::kMalformedRational, "empty integer in \"" + std::string(whole) + "\"");
  }
  BigInt out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::kMalformedRational, "bad character in \"" + std::string(whole) + "\"");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::kDivisionByZero, "zero denominator");
  value_ = den < 0 ? Value(-BigInt(num), -BigInt(den)) : Value(num, den);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error(Errc::kDivisionByZero, "zero denominator");
  value_ = den.sign() < 0 ? Value(BigInt(-num), BigInt(-den)) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  BigInt num;
  BigInt den = 1;
  if (auto slash = body.find('/'); slash == std::string_view::npos) {
    num = parse_integer(body, text);
  } else {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
    if (den.is_zero()) {
      throw Error(Errc::kMalformedRational, "zero denominator in \"" + std::string(text) + "\"");
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

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
  if (rhs.is_zero()) throw Error(Errc::kDivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace monty
