#include "sgasket/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sgasket {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::inverse_power_of_two(std::size_t exponent) {
  BigInt den = 1;
  den <<= exponent;
  return Rational(BigInt(1), den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const {
  const BigInt den = denominator();
  if (den == 1) {
    return numerator().str();
  }
  return numerator().str() + "/" + den.str();
}

double Rational::to_double() const { return value_.convert_to<double>(); }

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
  if (rhs.value_ == 0) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(-value_); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (rhs.value_ < lhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sgasket
