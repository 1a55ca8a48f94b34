#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace surfsing {

enum class AdeFamily { A, D, E };

/// Du Val singularity type: A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
class AdeType {
 public:
  /// Throws InputError for an index outside the family's range.
  AdeType(AdeFamily family, int index);

  /// Accepts "A4", "A_4", "D5", "E6" (case-sensitive family letter).
  static AdeType parse(std::string_view symbol);

  AdeFamily family() const { return family_; }
  int index() const { return index_; }
  /// Number of exceptional curves in the minimal resolution.
  int rank() const { return index_; }
  /// |det| of the intersection matrix of the Dynkin diagram.
  int determinant_magnitude() const;

  std::string str() const;

  friend auto operator<=>(const AdeType&, const AdeType&) = default;

 private:
  AdeFamily family_;
  int index_;
};

}  // namespace surfsing
