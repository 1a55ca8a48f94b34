#pragma once

// Small graph builders shared by the unit and acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "surfsing/ade.hpp"
#include "surfsing/dual_graph.hpp"

namespace testgraphs {

inline surfsing::DualGraph chain(const std::vector<std::int64_t>& weights, const std::string& prefix = "E") {
  surfsing::DualGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i) g.add_curve(prefix + std::to_string(i + 1), weights[i]);
  for (std::size_t i = 1; i < weights.size(); ++i) {
    g.add_meeting(prefix + std::to_string(i), prefix + std::to_string(i + 1));
  }
  return g;
}

/// (-2)-curves: a centre with three legs of the given lengths.
inline surfsing::DualGraph star(int a, int b, int c) {
  surfsing::DualGraph g;
  g.add_curve("C", -2);
  int leg_no = 0;
  for (int len : {a, b, c}) {
    ++leg_no;
    std::string prev = "C";
    for (int k = 1; k <= len; ++k) {
      std::string id = "L" + std::to_string(leg_no) + "_" + std::to_string(k);
      g.add_curve(id, -2);
      g.add_meeting(prev, id);
      prev = id;
    }
  }
  return g;
}

inline surfsing::DualGraph dynkin(const surfsing::AdeType& t) {
  switch (t.family()) {
    case surfsing::AdeFamily::A: return chain(std::vector<std::int64_t>(static_cast<std::size_t>(t.index()), -2));
    case surfsing::AdeFamily::D: return star(1, 1, t.index() - 3);
    case surfsing::AdeFamily::E: return star(1, 2, t.index() - 4);
  }
  return {};
}

inline std::vector<std::vector<std::int64_t>> matrix_of(const surfsing::DualGraph& g) {
  std::vector<std::vector<std::int64_t>> m(g.size(), std::vector<std::int64_t>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g.intersection(i, j);
  }
  return m;
}

}  // namespace testgraphs
