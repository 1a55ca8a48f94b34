#include "surfsing/ade.hpp"

#include "surfsing/errors.hpp"

namespace surfsing {

AdeType::AdeType(AdeFamily family, int index) : family_(family), index_(index) {
  bool ok = false;
  switch (family) {
    case AdeFamily::A: ok = index >= 1; break;
    case AdeFamily::D: ok = index >= 4; break;
    case AdeFamily::E: ok = index >= 6 && index <= 8; break;
  }
  if (!ok) throw InputError("invalid ADE index " + std::to_string(index) + " for " + str());
}

AdeType AdeType::parse(std::string_view symbol) {
  if (symbol.size() < 2) throw InputError("bad ADE symbol '" + std::string(symbol) + "'");
  AdeFamily family;
  switch (symbol[0]) {
    case 'A': family = AdeFamily::A; break;
    case 'D': family = AdeFamily::D; break;
    case 'E': family = AdeFamily::E; break;
    default: throw InputError("bad ADE symbol '" + std::string(symbol) + "'");
  }
  std::string_view digits = symbol.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 6) {
    throw InputError("bad ADE symbol '" + std::string(symbol) + "'");
  }
  int index = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("bad ADE symbol '" + std::string(symbol) + "'");
    index = index * 10 + (c - '0');
  }
  return AdeType(family, index);
}

int AdeType::determinant_magnitude() const {
  switch (family_) {
    case AdeFamily::A: return index_ + 1;
    case AdeFamily::D: return 4;
    case AdeFamily::E: return 9 - index_;
  }
  return 0;
}

std::string AdeType::str() const {
  const char* letter = family_ == AdeFamily::A ? "A" : family_ == AdeFamily::D ? "D" : "E";
  return letter + std::to_string(index_);
}

}  // namespace surfsing
