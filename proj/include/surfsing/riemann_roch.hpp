#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "surfsing/discrepancy.hpp"
#include "surfsing/dual_graph.hpp"
#include "surfsing/qdivisor.hpp"

namespace surfsing {

/// Minimal resolution Y -> X of a log terminal surface, described by the
/// exceptional dual graph plus the two global numbers the graph cannot see.
class SurfaceData {
 public:
  /// Throws HypothesisError unless every discrepancy lies in (-1, 0].
  SurfaceData(DualGraph graph, DiscrepancyReport report, std::int64_t ky_squared,
              std::int64_t chi_oy = 1);

  /// Solves the discrepancies of `graph` first.
  static SurfaceData from_graph(DualGraph graph, std::int64_t ky_squared, std::int64_t chi_oy = 1);

  const DualGraph& graph() const { return graph_; }
  const DiscrepancyReport& report() const { return report_; }
  std::int64_t ky_squared() const { return ky_squared_; }
  std::int64_t chi_oy() const { return chi_oy_; }

 private:
  DualGraph graph_;
  DiscrepancyReport report_;
  std::int64_t ky_squared_;
  std::int64_t chi_oy_;
};

/// Exceptional parts of the divisors used to compute chi(-nK_X) on Y:
///   correction = sum ceil((n+1) alpha_i) E_i
///   fractional = sum (ceil((n+1) alpha_i) - (n+1) alpha_i) E_i
struct AuxiliaryDivisors {
  QDivisor correction;
  QDivisor fractional;
  /// Every coefficient of `fractional` lies in [0, 1).
  bool fractional_in_unit_interval = false;
};

AuxiliaryDivisors auxiliary_divisors(const SurfaceData& s, std::int64_t n);

/// chi(X, O_X(-nK_X)) for n >= 0:
///   n(n+1)/2 K_Y^2 - (2n+1)/2 K_Y.C + C^2/2 + chi(O_Y),
///   C = sum ceil((n+1) alpha_i) E_i.
/// Throws InputError for n < 0 and InternalError on a non-integral result.
Rational chi_anti_pluricanonical(const SurfaceData& s, std::int64_t n);

/// Rows (0, chi), ..., (n_max, chi). Throws InputError for n_max < 1.
std::vector<std::pair<std::int64_t, Rational>> chi_table(const SurfaceData& s, std::int64_t n_max);

/// Smallest n in [1, cap] with chi(-nK) > 0; nullopt when none.
///
/// Reading chi as h^0 assumes the surface is log del Pezzo, so a negative
/// chi contradicts the assumption and raises HypothesisError.
std::optional<std::int64_t> tau(const SurfaceData& s, std::int64_t cap);

}  // namespace surfsing
