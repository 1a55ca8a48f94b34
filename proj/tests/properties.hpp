#pragma once

// Randomised and exhaustive property checks. Each returns the number of
// cases examined and a description of every failure.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "oracles.hpp"
#include "surfsing/discrepancy.hpp"
#include "surfsing/riemann_roch.hpp"
#include "surfsing/singular_rr.hpp"

namespace property {

using namespace surfsing;

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(const std::string& what) {
    if (failures.size() < 20) failures.push_back(what);
  }
};

inline std::string show(const std::vector<std::vector<std::int64_t>>& m) {
  std::ostringstream out;
  out << '[';
  for (const auto& row : m) {
    out << '[';
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << ']';
  }
  out << ']';
  return out.str();
}

inline Outcome cyclic_symmetry(std::int64_t r_max = 40) {
  Outcome o;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (std::int64_t i = 1; i < r; ++i) {
      ++o.cases;
      if (cyclic_contribution(r, i) != cyclic_contribution(r, r - i)) {
        o.fail("r=" + std::to_string(r) + " i=" + std::to_string(i));
      }
    }
  }
  return o;
}

inline Outcome a_bound_brute_force(std::int64_t n_max = 60) {
  Outcome o;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    ++o.cases;
    auto got = worst_case_bound(AdeType(AdeFamily::A, static_cast<int>(n - 1)));
    auto want = oracle::brute_min_cyclic(n);
    if (got != want) o.fail("A" + std::to_string(n - 1) + ": " + got.str() + " vs " + want.str());
  }
  return o;
}

/// Every graph on 1..4 vertices with simple edges and weights in [-5, -1].
/// The library verdict must match the quadratic-form oracle and the
/// characteristic-polynomial criterion, and any vector in the box
/// [-box_bound, box_bound]^n with x^T M x >= 0 must come with a "no".
inline Outcome small_graph_definiteness(int box_bound = 1) {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::size_t weight_count = 1;
    for (std::size_t i = 0; i < n; ++i) weight_count *= 5;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      for (std::size_t w = 0; w < weight_count; ++w) {
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
        std::size_t code = w;
        for (std::size_t i = 0; i < n; ++i) {
          m[i][i] = -1 - static_cast<std::int64_t>(code % 5);
          code /= 5;
        }
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          if (mask & (std::size_t{1} << e)) m[pairs[e].first][pairs[e].second] = m[pairs[e].second][pairs[e].first] = 1;
        }
        ++o.cases;
        std::vector<std::vector<Integer>> big(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) big[i][j] = m[i][j];
        }
        IntersectionMatrix im(big);
        bool lib = is_negative_definite(im);
        bool lib_pivots = definiteness(im).negative_definite;
        bool form = oracle::quadratic_form_negative(m);
        bool charpoly = oracle::charpoly_negative(m);
        bool witness = oracle::has_nonnegative_vector(m, box_bound);
        if (lib != form || lib_pivots != form || charpoly != form || (witness && lib)) {
          o.fail(show(m) + ": library " + (lib ? "yes" : "no") + ", quadratic form " + (form ? "yes" : "no") +
                 ", charpoly " + (charpoly ? "yes" : "no") + ", witness " + (witness ? "found" : "none"));
        }
      }
    }
  }
  return o;
}

/// Random chains of curves with self-intersection <= -2.
inline Outcome chain_discrepancies_in_range(std::size_t trials = 500) {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> weight(-9, -2);
  std::uniform_int_distribution<int> length(1, 6);  // cofactor Cramer is factorial in the length
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(length(rng)));
    for (auto& x : w) x = weight(rng);
    auto g = testgraphs::chain(w);
    auto report = solve_discrepancies(g);
    std::vector<std::int64_t> k;
    for (auto x : w) k.push_back(-2 - x);
    auto want = oracle::cramer(oracle::chain_matrix(w), k);
    for (std::size_t i = 0; i < w.size(); ++i) {
      ++o.cases;
      const Rational& a = report.curves[i].alpha;
      if (!(a > -1 && a <= 0) || a != want[i]) {
        o.fail(show({w}) + " curve " + std::to_string(i + 1) + ": " + a.str());
      }
    }
  }
  return o;
}

inline Outcome gorenstein_chi_agreement(std::int64_t n_max = 10) {
  Outcome o;
  const std::vector<std::pair<std::string, std::int64_t>> cases = {
      {"A1", 8}, {"A2", 7}, {"A4", 5}, {"D4", 4}, {"D5", 4}, {"E6", 3}, {"E7", 2}, {"E8", 1}, {"A8", 1}};
  const std::vector<Rational> none;
  for (const auto& [sym, k2] : cases) {
    auto s = SurfaceData::from_graph(testgraphs::dynkin(AdeType::parse(sym)), k2, 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      ++o.cases;
      Rational d2(n * n * k2);
      Rational lhs = chi_weil(d2, Rational(n * k2), 1, none);
      Rational rhs = chi_anti_pluricanonical(s, n);
      if (lhs != rhs) o.fail(sym + " n=" + std::to_string(n) + ": " + lhs.str() + " vs " + rhs.str());
    }
  }
  return o;
}

/// Random log terminal chains and stars with arbitrary K_Y^2.
inline Outcome chi_integral(std::size_t trials = 300) {
  Outcome o;
  std::mt19937_64 rng(4096);
  std::uniform_int_distribution<int> weight(-7, -2);
  std::uniform_int_distribution<int> length(1, 7);
  std::uniform_int_distribution<int> k2(-12, 9);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(length(rng)));
    for (auto& x : w) x = weight(rng);
    auto s = SurfaceData::from_graph(testgraphs::chain(w), k2(rng), 1);
    for (std::int64_t n = 0; n <= 12; ++n) {
      ++o.cases;
      try {
        auto chi = chi_anti_pluricanonical(s, n);
        if (!chi.is_integer()) o.fail(show({w}) + " n=" + std::to_string(n) + ": " + chi.str());
      } catch (const std::exception& e) {
        o.fail(show({w}) + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
  }
  return o;
}

}  // namespace property
