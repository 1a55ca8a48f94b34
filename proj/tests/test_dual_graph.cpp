#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphs.hpp"
#include "oracles.hpp"
#include "surfsing/dual_graph.hpp"
#include "surfsing/errors.hpp"

using namespace surfsing;
using testgraphs::chain;

namespace {

const std::string kDataDir = SURFSING_TEST_DATA;

IntersectionMatrix int_matrix(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<Integer>> e;
  for (const auto& row : m) e.emplace_back(row.begin(), row.end());
  return IntersectionMatrix(e);
}

}  // namespace

TEST_SUITE("dual_graph") {

TEST_CASE("negative definiteness on small matrices") {
  CHECK(is_negative_definite(int_matrix({{-2}})));
  CHECK_FALSE(is_negative_definite(int_matrix({{-1, 1}, {1, -1}})));
  auto x1 = load_dual_graph(kDataDir + "/x1.graph");
  CHECK(is_negative_definite(IntersectionMatrix::of(x1)));
  CHECK(IntersectionMatrix::of(x1).at(1, 1) == -5);

  auto report = definiteness(int_matrix({{-1, 1}, {1, -1}}));
  REQUIRE(report.failing_minor);
  CHECK(*report.failing_minor == 2);
  CHECK(report.minors[1] == 0);
}

TEST_CASE("non-symmetric or non-square matrices are rejected") {
  CHECK_THROWS_AS(int_matrix({{-2, 1}, {0, -2}}), InputError);
  CHECK_THROWS_AS(int_matrix({{-2, 1}}), InputError);
}

TEST_CASE("leading minors match cofactor expansion; pivots agree in sign") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> weight(-5, 1);
  std::uniform_int_distribution<int> off(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = weight(rng);
      for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = off(rng);
    }
    auto mat = int_matrix(m);
    auto minors = leading_principal_minors(mat);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<std::int64_t>> block(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) block[i][j] = m[i][j];
      }
      CHECK(minors[k - 1] == oracle::cofactor_det(block));
    }
    auto pivots = elimination_pivots(mat);
    bool all_negative = pivots.size() == n &&
                        std::all_of(pivots.begin(), pivots.end(), [](const Rational& p) { return p < 0; });
    CHECK(all_negative == is_negative_definite(mat));
  }
}

TEST_CASE("canonical intersection by adjunction") {
  DualGraph g;
  g.add_curve("a", -2);
  g.add_curve("b", -5);
  g.add_curve("c", -1);
  CHECK(canonical_intersection(g, "a") == 0);
  CHECK(canonical_intersection(g, "b") == 3);
  CHECK(canonical_intersection(g, "c") == -1);
  CHECK_THROWS_AS(canonical_intersection(g, "zz"), InputError);
}

TEST_CASE("arithmetic genus") {
  auto single = chain({-2});
  CHECK(arithmetic_genus(single, Cycle({{"E1", 1}})) == 0);
  for (int n = 1; n <= 8; ++n) {
    auto an = chain(std::vector<std::int64_t>(static_cast<std::size_t>(n), -2));
    std::map<std::string, std::int64_t> ones;
    for (const auto& c : an.curves()) ones[c.id] = 1;
    CHECK(arithmetic_genus(an, Cycle(ones)) == 0);
  }
  // 2E on a (-2)-curve: Z^2 = -8, Z.K = 0, p_a = -3.
  CHECK(arithmetic_genus(single, Cycle({{"E1", 2}})) == -3);
  CHECK_THROWS_AS(Cycle({{"E1", 0}}), InputError);
  CHECK_THROWS_AS(Cycle({{"E1", -1}, {"E2", 2}}), InputError);
  CHECK_THROWS_AS(arithmetic_genus(single, Cycle({{"Q", 1}})), InputError);

  auto x2 = load_dual_graph(kDataDir + "/x2.graph");
  CHECK(arithmetic_genus(x2, fundamental_cycle(x2)) <= 0);
}

TEST_CASE("fundamental cycle examples") {
  auto a5 = chain({-2, -2, -2, -2, -2});
  for (const auto& [id, m] : fundamental_cycle(a5).multiplicities()) CHECK(m == 1);
  CHECK(fundamental_cycle(chain({-3})) == Cycle({{"E1", 1}}));

  auto d4 = testgraphs::star(1, 1, 1);
  auto z = fundamental_cycle(d4);
  CHECK(z.multiplicity("C") == 2);
  CHECK(z.multiplicity("L1_1") == 1);
  CHECK(z.multiplicity("L2_1") == 1);
  CHECK(z.multiplicity("L3_1") == 1);

  DualGraph two;
  two.add_curve("a", -2);
  two.add_curve("b", -2);
  CHECK_THROWS_AS(fundamental_cycle(two), InputError);  // disconnected
  CHECK_THROWS_AS(fundamental_cycle(chain({-1, -1})), InputError);
}

TEST_CASE("fundamental cycle equals the brute-force minimal anti-nef cycle") {
  for (const char* sym : {"D4", "D5", "D6", "E6", "E7", "E8"}) {
    auto g = testgraphs::dynkin(AdeType::parse(sym));
    auto z = fundamental_cycle(g);
    auto want = oracle::minimal_anti_nef_cycle(testgraphs::matrix_of(g), 6);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(z.multiplicity(g.curves()[i].id) == want[i]);
  }

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> weight(-4, -1);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 60; ++trial) {
    // random tree on 2..5 vertices
    std::size_t n = 2 + trial % 4;
    DualGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_curve("v" + std::to_string(i), weight(rng));
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      g.add_meeting("v" + std::to_string(parent(rng)), "v" + std::to_string(i));
    }
    if (!is_negative_definite(IntersectionMatrix::of(g))) continue;
    auto z = fundamental_cycle(g);
    std::int64_t top = 0;
    for (const auto& [id, m] : z.multiplicities()) top = std::max(top, m);
    if (top > 5) continue;
    auto want = oracle::minimal_anti_nef_cycle(testgraphs::matrix_of(g), 5);
    for (std::size_t i = 0; i < n; ++i) CHECK(z.multiplicity(g.curves()[i].id) == want[i]);
    for (std::size_t j = 0; j < n; ++j) CHECK(cycle_dot_curve(g, z, j) <= 0);
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("contractibility") {
  CHECK(is_contractible_to_rational_point(load_dual_graph(kDataDir + "/x1.graph")));
  CHECK(is_contractible_to_rational_point(load_dual_graph(kDataDir + "/x2.graph")));
  CHECK(is_contractible_to_rational_point(load_dual_graph(kDataDir + "/counterexample.graph")));
  CHECK_FALSE(is_contractible_to_rational_point(chain({-1, -1})));
  CHECK_FALSE(is_contractible_to_rational_point(load_dual_graph(kDataDir + "/not_nd.graph")));
}

TEST_CASE("classify_ade examples") {
  CHECK(classify_ade(load_dual_graph(kDataDir + "/a4.graph")) == AdeType::parse("A4"));
  CHECK(classify_ade(load_dual_graph(kDataDir + "/d4.graph")) == AdeType::parse("D4"));
  CHECK_FALSE(classify_ade(load_dual_graph(kDataDir + "/x1.graph")).has_value());
  CHECK(classify_ade(testgraphs::star(1, 2, 2)) == AdeType::parse("E6"));
  CHECK(classify_ade(testgraphs::star(1, 2, 3)) == AdeType::parse("E7"));
  CHECK(classify_ade(testgraphs::star(1, 2, 4)) == AdeType::parse("E8"));
  CHECK_FALSE(classify_ade(testgraphs::star(1, 2, 5)).has_value());  // affine E8 extended
  CHECK_FALSE(classify_ade(testgraphs::star(2, 2, 2)).has_value());

  DualGraph double_edge;
  double_edge.add_curve("a", -2);
  double_edge.add_curve("b", -2);
  double_edge.add_meeting("a", "b", 2);
  CHECK_FALSE(classify_ade(double_edge).has_value());

  DualGraph cycle = chain({-2, -2, -2});
  cycle.add_meeting("E1", "E3");
  CHECK_FALSE(classify_ade(cycle).has_value());
}

TEST_CASE("ADE diagrams: determinant magnitude and rational fundamental cycle") {
  std::vector<AdeType> types;
  for (int n = 1; n <= 12; ++n) types.emplace_back(AdeFamily::A, n);
  for (int n = 4; n <= 12; ++n) types.emplace_back(AdeFamily::D, n);
  for (int n = 6; n <= 8; ++n) types.emplace_back(AdeFamily::E, n);
  for (const auto& t : types) {
    CAPTURE(t.str());
    auto g = testgraphs::dynkin(t);
    CHECK(classify_ade(g) == t);
    auto minors = leading_principal_minors(IntersectionMatrix::of(g));
    Integer det = minors.back();
    CHECK((det < 0 ? Integer(-det) : det) == t.determinant_magnitude());
    CHECK(arithmetic_genus(g, fundamental_cycle(g)) == 0);
  }
}

TEST_CASE("classify_ade is invariant under relabeling") {
  std::mt19937_64 rng(23);
  for (const char* sym : {"A5", "D5", "D7", "E6", "E7", "E8"}) {
    auto base = testgraphs::dynkin(AdeType::parse(sym));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> perm(base.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      DualGraph g;
      for (std::size_t p : perm) g.add_curve("x" + std::to_string(perm[p]), -2);
      for (const auto& [key, mult] : base.edges()) {
        g.add_meeting("x" + std::to_string(perm[key.first]), "x" + std::to_string(perm[key.second]), mult);
      }
      CHECK(classify_ade(g) == AdeType::parse(sym));
    }
  }
}

TEST_CASE("components keep vertex order and split disconnected graphs") {
  auto g = load_dual_graph(kDataDir + "/counterexample.graph");
  auto comps = g.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == load_dual_graph(kDataDir + "/x1.graph"));
  CHECK(comps[1] == load_dual_graph(kDataDir + "/x2.graph"));
  CHECK_FALSE(g.is_connected());
  CHECK(g.is_minimal());
  CHECK_FALSE(chain({-2, -1}).is_minimal());
}

TEST_CASE("graph file errors carry line numbers") {
  try {
    load_dual_graph(kDataDir + "/bad_directive.graph");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_dual_graph("curve a -2\ncurve a -3\n"), ParseError);
  CHECK_THROWS_AS(parse_dual_graph("curve a -2\nmeet a b\n"), ParseError);
  CHECK_THROWS_AS(parse_dual_graph("curve a -2\nmeet a a\n"), ParseError);
  CHECK_THROWS_AS(parse_dual_graph("curve a x\n"), ParseError);
  CHECK_THROWS_AS(parse_dual_graph("curve a -2\ncurve b -2\nmeet a b 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dual_graph("curve a -2\ncurve b -2\nmeet a b\nmeet b a\n"), ParseError);
  CHECK_THROWS_AS(load_dual_graph(kDataDir + "/no_such_file.graph"), InputError);

  auto g = parse_dual_graph("# comment\ncurve a -2   # trailing\n\ncurve b -3\nmeet a b 2\n");
  CHECK(g.intersection("a", "b") == 2);
}

TEST_CASE("format then parse is the identity on graphs") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> weight(-6, 0);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    DualGraph g;
    std::size_t n = 1 + trial % 6;
    for (std::size_t i = 0; i < n; ++i) g.add_curve("c" + std::to_string(i), weight(rng));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        int m = mult(rng);
        if (m > 0) g.add_meeting("c" + std::to_string(i), "c" + std::to_string(j), m);
      }
    }
    CHECK(parse_dual_graph(format_dual_graph(g)) == g);
  }
}

}  // TEST_SUITE
