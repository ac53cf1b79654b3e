#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number whose denominator is a power of two.
///
/// Stored as numerator / 2^exponent in lowest terms: the numerator is odd
/// whenever the exponent is positive, and zero is always 0 / 2^0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value) : numerator_(value) {}  // NOLINT: implicit by design of arithmetic types
  Dyadic(BigInt value) : numerator_(std::move(value)) {}  // NOLINT
  Dyadic(BigInt numerator, unsigned exponent)
      : numerator_(std::move(numerator)), exponent_(exponent) {
    normalize();
  }

  /// 2^e for any integer e.
  static Dyadic pow2(int e) {
    if (e >= 0) return Dyadic(BigInt(1) << e);
    return Dyadic(BigInt(1), static_cast<unsigned>(-e));
  }

  const BigInt& numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }
  BigInt denominator() const { return BigInt(1) << exponent_; }
  bool is_integer() const { return exponent_ == 0; }
  bool is_zero() const { return numerator_ == 0; }

  Dyadic& operator+=(const Dyadic& other) {
    const unsigned e = std::max(exponent_, other.exponent_);
    numerator_ = (numerator_ << (e - exponent_)) + (other.numerator_ << (e - other.exponent_));
    exponent_ = e;
    normalize();
    return *this;
  }
  Dyadic& operator-=(const Dyadic& other) { return *this += -other; }
  Dyadic& operator*=(const Dyadic& other) {
    numerator_ *= other.numerator_;
    exponent_ += other.exponent_;
    normalize();
    return *this;
  }

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  Dyadic operator-() const {
    Dyadic r = *this;
    r.numerator_ = -r.numerator_;
    return r;
  }

  /// Exact division by an integer; throws if the quotient is not dyadic.
  Dyadic divided_by(const BigInt& divisor) const {
    if (divisor == 0) throw std::domain_error("division by zero");
    BigInt d = abs(divisor);
    unsigned twos = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++twos;
    }
    if (numerator_ % d != 0) throw std::domain_error("quotient is not a dyadic rational");
    BigInt q = numerator_ / d;
    if (divisor < 0) q = -q;
    return Dyadic(std::move(q), exponent_ + twos);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const unsigned e = std::max(a.exponent_, b.exponent_);
    const BigInt lhs = a.numerator_ << (e - a.exponent_);
    const BigInt rhs = b.numerator_ << (e - b.exponent_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" for integers, "p/q" otherwise, always in lowest terms.
  std::string to_string() const {
    std::string s = numerator_.str();
    if (exponent_ > 0) s += "/" + denominator().str();
    return s;
  }

  /// Inverse of to_string. Accepts any "p/q" whose value is dyadic.
  static Dyadic parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Dyadic(BigInt(std::string(text)));
      const BigInt num(std::string(text.substr(0, slash)));
      const BigInt den(std::string(text.substr(slash + 1)));
      return Dyadic(num).divided_by(den);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a dyadic rational: '" + std::string(text) + "'");
    }
  }

 private:
  void normalize() {
    if (numerator_ == 0) {
      exponent_ = 0;
      return;
    }
    while (exponent_ > 0 && numerator_ % 2 == 0) {
      numerator_ /= 2;
      --exponent_;
    }
  }

  BigInt numerator_ = 0;
  unsigned exponent_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Dyadic& value) {
  return os << value.to_string();
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace hurwitz
