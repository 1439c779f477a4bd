#include "monosimplex/rational.hpp"

#include <cctype>
#include <ostream>

#include "monosimplex/errors.hpp"

namespace monosimplex {

namespace {

std::size_t hash_mpz(const BigInt& v) noexcept {
  std::size_t h = static_cast<std::size_t>(sgn(v)) * 0x9e3779b97f4a7c15ULL;
  const auto* raw = v.get_mpz_t();
  const std::size_t limbs = mpz_size(raw);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(raw, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer", 0);
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ParseError("sign without digits", i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("expected a decimal digit in '" + std::string(text) + "'", j);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw InvalidArgument("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_, Canonical{}); }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw InvalidArgument("reciprocal of zero");
  if (sgn(num_) < 0) return Rational(-den_, -num_, Canonical{});
  return Rational(den_, num_, Canonical{});
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InvalidArgument("division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = (a.den_ == b.den_) ? cmp(a.num_, b.num_) : cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str(10);
  return num_.get_str(10) + "/" + den_.get_str(10);
}

Rational Rational::parse(std::string_view text) {
  const auto lead = text.find_first_not_of(" \t");
  if (lead == std::string_view::npos) throw ParseError("empty rational", 0);
  text = text.substr(lead, text.find_last_not_of(" \t") + 1 - lead);
  try {
    return parse_trimmed(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" (at column")), lead + e.position());
  }
}

Rational Rational::parse_trimmed(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt n = parse_bigint(text.substr(0, slash));
  BigInt d;
  try {
    d = parse_bigint(text.substr(slash + 1));
  } catch (const ParseError& e) {
    throw ParseError("bad denominator in '" + std::string(text) + "'", slash + 1 + e.position());
  }
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  return Rational(std::move(n), std::move(d));
}

std::size_t Rational::hash() const noexcept { return hash_mpz(num_) * 31 + hash_mpz(den_); }

Rational rat(long numerator, long denominator) { return Rational(BigInt(numerator), BigInt(denominator)); }

Rational rat(const BigInt& numerator, const BigInt& denominator) { return Rational(numerator, denominator); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace monosimplex
