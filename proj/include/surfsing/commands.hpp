#pragma once

#include <cstdint>
#include <optional>

#include "surfsing/ade.hpp"
#include "surfsing/dual_graph.hpp"
#include "surfsing/picard_lab.hpp"
#include "surfsing/rational.hpp"
#include "surfsing/reference.hpp"
#include "surfsing/report.hpp"
#include "surfsing/singular_rr.hpp"

// Report builders behind each CLI subcommand. They throw InputError for bad
// input and HypothesisError when a mathematical precondition fails; the CLI
// turns those into exit statuses 2 and 1.
namespace surfsing::commands {

Report check(const DualGraph& g);
Report discrepancy(const DualGraph& g, std::optional<std::int64_t> ky_squared);

struct ChiOptions {
  std::int64_t ky_squared = 0;
  std::int64_t chi_oy = 1;
  std::int64_t n_max = 6;
  bool assume_vanishing = false;
  bool show_divisors = false;
};
Report chi(const DualGraph& g, const ChiOptions& options);
Report tau(const DualGraph& g, std::int64_t ky_squared, std::int64_t chi_oy, std::int64_t cap);

Report lab_run(const BlowupProgram& program);
/// Rebuilds the counterexample and diffs the lattice-level quantities,
/// discrepancies and K_S^2 against `ref`.
Report lab_example(const CounterexampleReference& ref = counterexample_reference(),
                   const BlowupProgram& program = builtin_counterexample_program());

Report contribution(std::int64_t r, std::int64_t i);
Report bound(const AdeType& type);
Report verify_basket_bounds();
Report h0_bound(const Rational& d_squared, const SingularityBasket& basket);

/// Full reproduction: every lab check, definiteness, contractibility,
/// discrepancies, K_S^2, the chi table, tau and the 27 basket bounds.
Report reproduce(const CounterexampleReference& ref = counterexample_reference(),
                    const BlowupProgram& program = builtin_counterexample_program());

}  // namespace surfsing::commands
