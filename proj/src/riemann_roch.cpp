#include "surfsing/riemann_roch.hpp"

namespace surfsing {

SurfaceData::SurfaceData(DualGraph graph, DiscrepancyReport report, std::int64_t ky_squared,
                         std::int64_t chi_oy)
    : graph_(std::move(graph)),
      report_(std::move(report)),
      ky_squared_(ky_squared),
      chi_oy_(chi_oy) {
  if (report_.curves.size() != graph_.size()) {
    throw InputError("discrepancy report does not match the graph");
  }
  for (const auto& c : report_.curves) {
    if (!(c.alpha > -1 && c.alpha <= 0)) {
      throw HypothesisError("discrepancy of " + c.id + " is " + c.alpha.str() +
                            ", outside (-1, 0]");
    }
  }
}

SurfaceData SurfaceData::from_graph(DualGraph graph, std::int64_t ky_squared, std::int64_t chi_oy) {
  auto report = solve_discrepancies(graph);
  return SurfaceData(std::move(graph), std::move(report), ky_squared, chi_oy);
}

AuxiliaryDivisors auxiliary_divisors(const SurfaceData& s, std::int64_t n) {
  if (n < 0) throw InputError("n must be non-negative");
  QDivisor scaled = Rational(n + 1) * s.report().alphas();
  AuxiliaryDivisors out;
  out.correction = round_up(scaled);
  out.fractional = out.correction - scaled;
  out.fractional_in_unit_interval = true;
  for (const auto& [id, b] : out.fractional.terms()) {
    if (b < 0 || b >= 1) out.fractional_in_unit_interval = false;
  }
  return out;
}

Rational chi_anti_pluricanonical(const SurfaceData& s, std::int64_t n) {
  const auto aux = auxiliary_divisors(s, n);
  const auto& g = s.graph();

  Rational k_dot_c;
  Rational c_squared;
  for (const auto& [a, ca] : aux.correction.terms()) {
    k_dot_c += ca * canonical_intersection(g, a);
    for (const auto& [b, cb] : aux.correction.terms()) {
      c_squared += ca * cb * g.intersection(a, b);
    }
  }

  const Rational nn(n);
  Rational chi = nn * (nn + 1) / 2 * s.ky_squared() - (2 * nn + 1) / 2 * k_dot_c +
                 c_squared / 2 + s.chi_oy();
  if (!chi.is_integer()) {
    throw InternalError("chi(-" + std::to_string(n) + "K) = " + chi.str() + " is not an integer");
  }
  return chi;
}

std::vector<std::pair<std::int64_t, Rational>> chi_table(const SurfaceData& s, std::int64_t n_max) {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  std::vector<std::pair<std::int64_t, Rational>> rows;
  for (std::int64_t n = 0; n <= n_max; ++n) rows.emplace_back(n, chi_anti_pluricanonical(s, n));
  return rows;
}

std::optional<std::int64_t> tau(const SurfaceData& s, std::int64_t cap) {
  if (cap < 1) throw InputError("cap must be at least 1");
  for (std::int64_t n = 1; n <= cap; ++n) {
    Rational chi = chi_anti_pluricanonical(s, n);
    if (chi < 0) {
      throw HypothesisError("chi(-" + std::to_string(n) + "K) = " + chi.str() +
                            " < 0 contradicts the log del Pezzo assumption");
    }
    if (chi > 0) return n;
  }
  return std::nullopt;
}

}  // namespace surfsing
