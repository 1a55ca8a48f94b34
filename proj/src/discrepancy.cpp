#include "surfsing/discrepancy.hpp"

#include <algorithm>

namespace surfsing {

std::string to_string(SingularityCategory c) {
  switch (c) {
    case SingularityCategory::TerminalSmooth: return "terminal-smooth";
    case SingularityCategory::Canonical: return "canonical";
    case SingularityCategory::LogTerminal: return "log terminal (strict)";
    case SingularityCategory::NotLogTerminal: return "not log terminal";
  }
  return "?";
}

NotNegativeDefiniteError::NotNegativeDefiniteError(std::size_t component, std::size_t minor_index,
                                                   const Integer& minor)
    : HypothesisError("component " + std::to_string(component + 1) +
                      " is not negative definite: leading minor d_" + std::to_string(minor_index) +
                      " = " + minor.str()),
      component_(component),
      minor_index_(minor_index),
      minor_(minor) {}

Rational DiscrepancyReport::alpha(const std::string& id) const {
  for (const auto& c : curves) {
    if (c.id == id) return c.alpha;
  }
  throw InputError("unknown curve '" + id + "'");
}

QDivisor DiscrepancyReport::alphas() const {
  QDivisor d;
  for (const auto& c : curves) d.set(c.id, c.alpha);
  return d;
}

std::vector<Rational> solve_intersection_system(const IntersectionMatrix& m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw InputError("right-hand side has the wrong length");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
  }
  // Gauss-Jordan with first-nonzero pivoting.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("singular intersection matrix");
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

namespace {

SingularityCategory categorize(const std::vector<CurveDiscrepancy>& curves) {
  auto all = [&](auto pred) { return std::all_of(curves.begin(), curves.end(), pred); };
  if (!all([](const CurveDiscrepancy& c) { return c.alpha > -1; })) {
    return SingularityCategory::NotLogTerminal;
  }
  if (all([](const CurveDiscrepancy& c) { return c.alpha > 0; })) {
    return SingularityCategory::TerminalSmooth;
  }
  if (all([](const CurveDiscrepancy& c) { return c.alpha >= 0; })) {
    return SingularityCategory::Canonical;
  }
  return SingularityCategory::LogTerminal;
}

}  // namespace

DiscrepancyReport solve_discrepancies(const DualGraph& g) {
  auto components = g.components();
  for (std::size_t c = 0; c < components.size(); ++c) {
    auto report = definiteness(IntersectionMatrix::of(components[c]));
    if (!report.negative_definite) {
      std::size_t k = *report.failing_minor;
      throw NotNegativeDefiniteError(c, k, report.minors[k - 1]);
    }
  }

  const std::size_t n = g.size();
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = canonical_intersection(g, g.curves()[i].id);
  auto alpha = solve_intersection_system(IntersectionMatrix::of(g), std::move(rhs));

  DiscrepancyReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& curve = g.curves()[i];
    CurveDiscrepancy row{curve.id, curve.self_intersection, canonical_intersection(g, curve.id),
                         alpha[i]};
    report.ks_squared_correction -= row.alpha * row.k_dot_e;
    report.curves.push_back(std::move(row));
  }
  report.category = categorize(report.curves);
  report.denominator_lcm = discrepancy_denominator(report);
  report.minimal_resolution = g.is_minimal();
  return report;
}

Rational ks_squared(std::int64_t ky_squared, const DiscrepancyReport& report, const DualGraph& g) {
  if (report.curves.size() != g.size()) throw InputError("report does not belong to this graph");
  Rational result = ky_squared;
  for (const auto& c : report.curves) result -= c.alpha * canonical_intersection(g, c.id);
  return result;
}

Integer discrepancy_denominator(const DiscrepancyReport& report) {
  Integer result = 1;
  for (const auto& c : report.curves) result = lcm(result, c.alpha.denominator());
  return result;
}

Rational discrepancy_residual(const DualGraph& g, const DiscrepancyReport& report) {
  Rational worst;
  for (std::size_t j = 0; j < g.size(); ++j) {
    Rational lhs = canonical_intersection(g, g.curves()[j].id);
    for (std::size_t i = 0; i < g.size(); ++i) {
      lhs -= report.alpha(g.curves()[i].id) * g.intersection(i, j);
    }
    worst = std::max(worst, abs(lhs));
  }
  return worst;
}

}  // namespace surfsing
