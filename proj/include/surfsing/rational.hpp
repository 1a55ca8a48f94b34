#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfsing {

using Integer = boost::multiprecision::cpp_int;

/// Narrow an arbitrary-precision integer; throws std::overflow_error if it
/// does not fit.
std::int64_t to_int64(const Integer& value);

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}           // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}          // NOLINT(google-explicit-constructor)
  Rational(long long value) : value_(value) {}     // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p", "p/q" (q may be negative; result is normalized).
  /// Throws InputError on malformed text.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;
  bool is_integer() const { return denominator() == 1; }
  int sign() const;

  /// Smallest integer >= *this.
  Integer ceil() const;
  /// Largest integer <= *this.
  Integer floor() const;

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(Raw{}, -a.value_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  using Value = boost::multiprecision::cpp_rational;
  struct Raw {};
  Rational(Raw, Value v) : value_(std::move(v)) {}

  Value value_;
};

Rational abs(const Rational& q);

/// Free-function spellings used by the round-up/round-down operators.
inline Integer ceil_rational(const Rational& q) { return q.ceil(); }
inline Integer floor_rational(const Rational& q) { return q.floor(); }

Integer lcm(const Integer& a, const Integer& b);

}  // namespace surfsing
