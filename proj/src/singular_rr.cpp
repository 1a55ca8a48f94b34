#include "surfsing/singular_rr.hpp"

#include <algorithm>
#include <numeric>

#include "surfsing/errors.hpp"
#include "text_util.hpp"

namespace surfsing {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t r) {
  std::int64_t m = a % r;
  return m < 0 ? m + r : m;
}

}  // namespace

CyclicQuotientType::CyclicQuotientType(std::int64_t r_, std::int64_t a1_, std::int64_t a2_,
                                       std::int64_t i_)
    : r(r_), a1(0), a2(0), eigen_index(0) {
  if (r < 1) throw InputError("cyclic group order must be positive");
  a1 = mod(a1_, r);
  a2 = mod(a2_, r);
  eigen_index = mod(i_, r);
}

bool CyclicQuotientType::is_a_type() const { return a1 == mod(1, r) && a2 == mod(-1, r); }

Rational cyclic_contribution(const CyclicQuotientType& t) {
  if (!t.is_a_type()) {
    throw InputError("contribution is only available for 1/r(1,-1) points");
  }
  const std::int64_t i = t.eigen_index;
  return Rational(-i * (t.r - i)) / Rational(2 * t.r);
}

Rational cyclic_contribution(std::int64_t r, std::int64_t i) {
  if (r < 1) throw InputError("cyclic group order must be positive");
  if (i < 0 || i >= r) throw InputError("eigen index must lie in [0, r)");
  return cyclic_contribution(CyclicQuotientType(r, 1, -1, i));
}

Rational worst_cyclic_contribution(std::int64_t r) {
  // -i(r-i) is smallest at the middle index.
  return cyclic_contribution(r, r / 2);
}

// ---------------------------------------------------------------------------
// Cover table

std::int64_t CoverTableRow::smoothing_point_count(std::int64_t n) const {
  if (smoothing_points == "n") return n;
  if (smoothing_points == "2n+1") return 2 * n + 1;
  std::int64_t fixed = 0;
  detail::parse_int64(smoothing_points, fixed);
  return fixed;
}

Rational CoverTableRow::worst_point_contribution(std::optional<std::int64_t> any_r) const {
  if (r) return worst_cyclic_contribution(*r);
  if (!any_r) throw InputError("cover row (" + std::to_string(id) + ") needs an explicit r");
  return worst_cyclic_contribution(*any_r);
}

const std::vector<CoverTableRow>& cover_table() {
  static const std::vector<CoverTableRow> rows = {
      {1, std::nullopt, "1/r(1,-1,0)", "xy+z^n", "A_{n-1} -r:1-> A_{rn-1}", "f+lz", "n"},
      {2, 4, "1/4(1,3,2)", "x^2+y^2+z^{2n-1}", "A_{2n-2} -4:1-> D_{2n+1}", "f+lz", "2n+1"},
      {3, 2, "1/2(0,1,1)", "x^2+y^2+z^{2n}", "A_{2n-1} -2:1-> D_{n+2}", "f+lx", "2"},
      {4, 3, "1/3(0,1,2)", "x^2+y^3+z^3", "D_4 -3:1-> E_6", "f+lx", "2"},
      {5, 2, "1/2(1,1,0)", "x^2+y^2z+z^n", "D_{n+1} -2:1-> D_{2n}", "f+lz", "n"},
      {6, 2, "1/2(1,0,1)", "x^2+y^3+z^4", "E_6 -2:1-> E_7", "f+ly", "3"},
  };
  return rows;
}

const CoverTableRow& cover_row(int id) {
  if (id < 1 || id > 6) throw InputError("cover table has rows 1..6");
  return cover_table()[static_cast<std::size_t>(id - 1)];
}

namespace {

Rational smoothing_bound(int row) {
  const auto& r = cover_row(row);
  return Rational(r.smoothing_point_count(0)) * r.worst_point_contribution();
}

}  // namespace

Rational worst_case_bound(const AdeType& t) {
  switch (t.family()) {
    case AdeFamily::A: {
      const std::int64_t n = t.index() + 1;
      const std::int64_t k = n / 2;
      if (n % 2 == 0) return Rational(-k, 4);
      return Rational(Integer(-k * (k + 1)), Integer(2 * (2 * k + 1)));
    }
    case AdeFamily::D:
      // D_{m} is the Z/2 quotient A_{2m-5} -> D_m.
      return smoothing_bound(3);
    case AdeFamily::E:
      if (t.index() == 6) return smoothing_bound(4);
      if (t.index() == 7) return smoothing_bound(6);
      return 0;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Baskets

SingularityBasket::SingularityBasket(std::vector<std::pair<int, AdeType>> terms) {
  for (auto& [count, type] : terms) {
    if (count < 1) throw InputError("basket multiplicity must be positive");
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const auto& t) { return t.second == type; });
    if (it == terms_.end()) {
      terms_.emplace_back(count, type);
    } else {
      it->first += count;
    }
  }
}

SingularityBasket SingularityBasket::parse(std::string_view text) {
  std::string trimmed = detail::trim(text);
  if (trimmed.empty() || trimmed == "none") return {};
  std::vector<std::pair<int, AdeType>> terms;
  for (const auto& part : detail::split(trimmed, '+')) {
    std::size_t digits = 0;
    while (digits < part.size() && part[digits] >= '0' && part[digits] <= '9') ++digits;
    if (digits > 6) throw InputError("bad basket term '" + part + "'");
    int count = digits == 0 ? 1 : std::stoi(part.substr(0, digits));
    terms.emplace_back(count, AdeType::parse(part.substr(digits)));
  }
  return SingularityBasket(std::move(terms));
}

std::vector<AdeType> SingularityBasket::points() const {
  std::vector<AdeType> out;
  for (const auto& [count, type] : terms_) out.insert(out.end(), static_cast<std::size_t>(count), type);
  std::sort(out.begin(), out.end());
  return out;
}

int SingularityBasket::total_rank() const {
  int sum = 0;
  for (const auto& [count, type] : terms_) sum += count * type.rank();
  return sum;
}

std::string SingularityBasket::str() const {
  if (terms_.empty()) return "none";
  std::string out;
  for (const auto& [count, type] : terms_) {
    if (!out.empty()) out += '+';
    if (count != 1) out += std::to_string(count);
    out += type.str();
  }
  return out;
}

const std::vector<SingularityBasket>& gorenstein_rank_one_baskets() {
  static const std::vector<SingularityBasket> baskets = [] {
    const char* symbols[] = {
        "A1",       "A1+A2", "A4",     "2A1+A3", "D5",    "A1+A5",    "3A2",
        "E6",       "3A1+D4", "A7",    "A1+D6",  "E7",    "A1+2A3",   "A2+A5",
        "D8",       "2A1+D6", "E8",    "A1+E7",  "A1+A7", "2A4",      "A8",
        "A1+A2+A5", "A2+E6",  "A3+D5", "4A2",    "2A1+2A3", "2D4",
    };
    std::vector<SingularityBasket> out;
    for (const char* s : symbols) out.push_back(SingularityBasket::parse(s));
    return out;
  }();
  return baskets;
}

bool is_gorenstein_rank_one_basket(const SingularityBasket& basket) {
  const auto& all = gorenstein_rank_one_baskets();
  return std::find(all.begin(), all.end(), basket) != all.end();
}

Rational contribution_floor() { return Rational(-3, 2); }

BasketBound verify_basket_bound(const SingularityBasket& basket) {
  BasketBound out{basket, Rational{}, false, is_gorenstein_rank_one_basket(basket)};
  for (const auto& [count, type] : basket.terms()) out.sum += Rational(count) * worst_case_bound(type);
  out.passes = out.sum >= contribution_floor();
  return out;
}

BasketBoundReport verify_all_basket_bounds() {
  BasketBoundReport report;
  report.all_pass = true;
  for (const auto& basket : gorenstein_rank_one_baskets()) {
    auto row = verify_basket_bound(basket);
    report.all_pass = report.all_pass && row.passes;
    if (report.rows.empty() || row.sum < report.minimum) report.minimum = row.sum;
    report.rows.push_back(std::move(row));
  }
  for (const auto& row : report.rows) {
    if (row.sum == report.minimum) report.minimizers.push_back(row.basket.str());
  }
  return report;
}

Rational chi_weil(const Rational& d_squared, const Rational& d_dot_minus_k, const Rational& chi_ox,
                  std::span<const Rational> contributions) {
  Rational chi = (d_squared + d_dot_minus_k) / 2 + chi_ox;
  for (const auto& c : contributions) chi += c;
  return chi;
}

Rational h0_lower_bound(const Rational& d_squared, const SingularityBasket& basket) {
  return d_squared / 2 + Rational(3, 2) + verify_basket_bound(basket).sum;
}

}  // namespace surfsing
