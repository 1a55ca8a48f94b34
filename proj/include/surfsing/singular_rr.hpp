#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfsing/ade.hpp"
#include "surfsing/rational.hpp"

namespace surfsing {

/// Point of type 1/r(a1, a2) carrying the eigensheaf L_i.
struct CyclicQuotientType {
  /// Throws InputError for r < 1. Weights and i are reduced mod r.
  CyclicQuotientType(std::int64_t r, std::int64_t a1, std::int64_t a2, std::int64_t eigen_index);

  std::int64_t r;
  std::int64_t a1;
  std::int64_t a2;
  std::int64_t eigen_index;

  /// Weights of the form (1, -1) mod r.
  bool is_a_type() const;
};

/// c_p(D) = -i(r - i)/(2r). Only defined for (1, -1) weights; anything else
/// throws InputError.
Rational cyclic_contribution(const CyclicQuotientType& t);
/// Shorthand for the point 1/r(1, -1) with eigen index i.
Rational cyclic_contribution(std::int64_t r, std::int64_t i);

/// min over i of cyclic_contribution(r, i).
Rational worst_cyclic_contribution(std::int64_t r);

/// One local cyclic cover between canonical surface germs, with the
/// Q-smoothing that splits the quotient into cyclic points.
struct CoverTableRow {
  int id;
  std::optional<std::int64_t> r;  // nullopt: any order
  std::string cover_type;
  std::string equation;
  std::string description;
  std::string perturbation;
  std::string smoothing_points;  // count as printed, may depend on n

  /// Evaluates `smoothing_points` at n.
  std::int64_t smoothing_point_count(std::int64_t n) const;
  /// Worst cyclic contribution at one smoothing point. Rows with any order
  /// need `any_r`; throws InputError if it is missing.
  Rational worst_point_contribution(std::optional<std::int64_t> any_r = std::nullopt) const;
};

/// The six cover types, in table order (ids 1..6).
const std::vector<CoverTableRow>& cover_table();
const CoverTableRow& cover_row(int id);

/// Lower bound for c_p(D) at a non-Cartier point of the given type:
///   A_{n-1}: min_i -i(n-i)/2n   (-k/4 for n = 2k, -k(k+1)/(2(2k+1)) for n = 2k+1)
///   D_m:     2 smoothing points of order 2      -> -1/2
///   E_6:     2 smoothing points of order 3      -> -2/3
///   E_7:     3 smoothing points of order 2      -> -3/4
///   E_8:     no cover, so D is Cartier there    ->  0
Rational worst_case_bound(const AdeType& t);

/// Multiset of ADE points, written like "2A1+A3".
class SingularityBasket {
 public:
  SingularityBasket() = default;
  explicit SingularityBasket(std::vector<std::pair<int, AdeType>> terms);

  /// "" or "none" is the empty basket. Throws InputError on bad symbols.
  static SingularityBasket parse(std::string_view text);

  /// (count, type) in first-appearance order, repeated types merged.
  const std::vector<std::pair<int, AdeType>>& terms() const { return terms_; }
  /// Every point, sorted.
  std::vector<AdeType> points() const;
  bool empty() const { return terms_.empty(); }
  int total_rank() const;

  std::string str() const;

  friend bool operator==(const SingularityBasket& a, const SingularityBasket& b) {
    return a.points() == b.points();
  }

 private:
  std::vector<std::pair<int, AdeType>> terms_;
};

/// The 27 singularity baskets a Gorenstein log del Pezzo surface of Picard
/// number one can carry, in the customary order.
const std::vector<SingularityBasket>& gorenstein_rank_one_baskets();
bool is_gorenstein_rank_one_basket(const SingularityBasket& basket);

/// Lowest admissible value of sum_p c_p(D).
Rational contribution_floor();  // -3/2

struct BasketBound {
  SingularityBasket basket;
  Rational sum;
  bool passes = false;
  /// Whether the basket is one of the 27; exploratory input is allowed.
  bool listed = false;
};

BasketBound verify_basket_bound(const SingularityBasket& basket);

struct BasketBoundReport {
  std::vector<BasketBound> rows;
  bool all_pass = false;
  Rational minimum;
  std::vector<std::string> minimizers;
};

BasketBoundReport verify_all_basket_bounds();

/// chi(O_X(D)) = (D^2 + D.(-K))/2 + chi(O_X) + sum c_p(D).
Rational chi_weil(const Rational& d_squared, const Rational& d_dot_minus_k, const Rational& chi_ox,
                  std::span<const Rational> contributions);

/// D^2/2 + 3/2 + sum of worst-case bounds over the basket.
Rational h0_lower_bound(const Rational& d_squared, const SingularityBasket& basket);

}  // namespace surfsing
