#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "surfsing/dual_graph.hpp"
#include "surfsing/errors.hpp"
#include "surfsing/qdivisor.hpp"
#include "surfsing/rational.hpp"

namespace surfsing {

enum class SingularityCategory {
  TerminalSmooth,  // every alpha > 0 (vacuous for an empty graph)
  Canonical,       // every alpha >= 0
  LogTerminal,     // every alpha > -1, some alpha < 0
  NotLogTerminal,  // some alpha <= -1
};

std::string to_string(SingularityCategory c);

/// Raised when a component's intersection matrix fails the leading-minor
/// sign test.
class NotNegativeDefiniteError : public HypothesisError {
 public:
  NotNegativeDefiniteError(std::size_t component, std::size_t minor_index, const Integer& minor);

  std::size_t component() const { return component_; }
  std::size_t minor_index() const { return minor_index_; }
  const Integer& minor() const { return minor_; }

 private:
  std::size_t component_;
  std::size_t minor_index_;
  Integer minor_;
};

struct CurveDiscrepancy {
  std::string id;
  std::int64_t self_intersection = 0;
  std::int64_t k_dot_e = 0;
  Rational alpha;
};

/// Solution of K_Y.E_j = sum_i alpha_i E_i.E_j over a dual graph.
struct DiscrepancyReport {
  std::vector<CurveDiscrepancy> curves;  // dual graph vertex order
  SingularityCategory category = SingularityCategory::TerminalSmooth;
  /// -sum alpha_i (K_Y.E_i); add to K_Y^2 to get K_X^2.
  Rational ks_squared_correction;
  Integer denominator_lcm = 1;
  /// False when some E_i^2 = -1 (warning only; the solve still runs).
  bool minimal_resolution = true;

  /// Throws InputError for an unknown curve.
  Rational alpha(const std::string& id) const;
  QDivisor alphas() const;
};

/// Exact solution x of M x = rhs. Throws InternalError if M is singular and
/// InputError on a size mismatch.
std::vector<Rational> solve_intersection_system(const IntersectionMatrix& m, std::vector<Rational> rhs);

/// Throws NotNegativeDefiniteError naming the first failing component and
/// leading minor.
DiscrepancyReport solve_discrepancies(const DualGraph& g);

/// K_X^2 = K_Y^2 - sum alpha_i (K_Y.E_i).
Rational ks_squared(std::int64_t ky_squared, const DiscrepancyReport& report, const DualGraph& g);

/// lcm of the alpha denominators. A lower-bound witness for the index of
/// K_X, not the index itself.
Integer discrepancy_denominator(const DiscrepancyReport& report);

/// max_j |K_Y.E_j - sum_i alpha_i E_i.E_j|; zero for a correct solve.
Rational discrepancy_residual(const DualGraph& g, const DiscrepancyReport& report);

}  // namespace surfsing
