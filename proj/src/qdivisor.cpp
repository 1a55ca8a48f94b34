#include "surfsing/qdivisor.hpp"

namespace surfsing {

QDivisor::QDivisor(const Terms& terms) {
  for (const auto& [curve, value] : terms) set(curve, value);
}

Rational QDivisor::coefficient(const std::string& curve) const {
  auto it = terms_.find(curve);
  return it == terms_.end() ? Rational{} : it->second;
}

void QDivisor::set(const std::string& curve, const Rational& value) {
  if (value == 0) {
    terms_.erase(curve);
  } else {
    terms_[curve] = value;
  }
}

bool QDivisor::is_integral() const {
  for (const auto& [curve, value] : terms_) {
    if (!value.is_integer()) return false;
  }
  return true;
}

QDivisor& QDivisor::operator+=(const QDivisor& o) {
  for (const auto& [curve, value] : o.terms_) set(curve, coefficient(curve) + value);
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& o) {
  for (const auto& [curve, value] : o.terms_) set(curve, coefficient(curve) - value);
  return *this;
}

QDivisor& QDivisor::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [curve, value] : terms_) value *= scale;
  return *this;
}

std::string QDivisor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [curve, value] : terms_) {
    if (!out.empty()) out += " + ";
    out += value.str() + "*" + curve;
  }
  return out;
}

QDivisor round_up(const QDivisor& d) {
  QDivisor out;
  for (const auto& [curve, value] : d.terms()) out.set(curve, Rational(value.ceil()));
  return out;
}

QDivisor round_down(const QDivisor& d) {
  QDivisor out;
  for (const auto& [curve, value] : d.terms()) out.set(curve, Rational(value.floor()));
  return out;
}

}  // namespace surfsing
