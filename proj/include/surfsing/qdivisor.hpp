#pragma once

#include <map>
#include <string>

#include "surfsing/rational.hpp"

namespace surfsing {

/// Finitely supported Q-linear combination of named curves.
///
/// Zero coefficients are never stored, so two divisors are equal exactly
/// when their coefficient maps are equal. Iteration is in lexicographic
/// order of curve identifiers.
class QDivisor {
 public:
  using Terms = std::map<std::string, Rational>;

  QDivisor() = default;
  explicit QDivisor(const Terms& terms);

  /// Coefficient of `curve`, zero when absent.
  Rational coefficient(const std::string& curve) const;
  void set(const std::string& curve, const Rational& value);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_integral() const;

  QDivisor& operator+=(const QDivisor& o);
  QDivisor& operator-=(const QDivisor& o);
  QDivisor& operator*=(const Rational& scale);

  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator*(const Rational& s, QDivisor d) { return d *= s; }
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  /// "a*E1 + b*E2", "0" when empty.
  std::string str() const;

 private:
  Terms terms_;
};

/// Coefficientwise ceiling.
QDivisor round_up(const QDivisor& d);
/// Coefficientwise floor.
QDivisor round_down(const QDivisor& d);

}  // namespace surfsing
