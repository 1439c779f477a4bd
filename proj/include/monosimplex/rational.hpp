#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals on top of GMP integers.
 *
 * Values are kept in canonical form at all times: denominator > 0 and
 * gcd(|numerator|, denominator) = 1, zero is 0/1. Equality and hashing
 * therefore work on the representation directly.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace monosimplex {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);
std::string to_string(const BigInt& value);
BigInt parse_bigint(std::string_view text);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of the numeric tower
  Rational(int value) : num_(value), den_(1) {}   // NOLINT
  Rational(const BigInt& value) : num_(value), den_(1) {}  // NOLINT
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  // Accepts "a", "-a", "a/b"; reduces.
  static Rational parse(std::string_view text);

  std::size_t hash() const noexcept;

 private:
  static Rational parse_trimmed(std::string_view text);

  struct Canonical {};
  Rational(BigInt numerator, BigInt denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

// rat(2,4) == 1/2; throws InvalidArgument on a zero denominator.
Rational rat(long numerator, long denominator);
Rational rat(const BigInt& numerator, const BigInt& denominator);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace monosimplex

template <>
struct std::hash<monosimplex::Rational> {
  std::size_t operator()(const monosimplex::Rational& r) const noexcept { return r.hash(); }
};
