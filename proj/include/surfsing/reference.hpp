#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfsing/rational.hpp"

namespace surfsing {

/// Published values for the builtin counterexample surface. Every check in
/// `verify-paper` and `lab example7` diffs against an instance of this.
struct CounterexampleReference {
  std::map<std::string, std::int64_t> self_intersections;  // all 16 curves
  /// Contracted-curve pairs meeting once; every other contracted pair is 0.
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> components;
  std::map<std::string, Rational> discrepancies;
  std::int64_t ky_squared = 0;
  std::int64_t picard_rank_resolution = 0;
  std::int64_t picard_rank_surface = 0;
  Rational ks_squared;
  std::vector<Rational> chi;  // n = 0, 1, ...
  std::int64_t tau = 0;
};

CounterexampleReference counterexample_reference();

}  // namespace surfsing
