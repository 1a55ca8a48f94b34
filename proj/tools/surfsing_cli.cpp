// Command-line front end for the surfsing library.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "surfsing/commands.hpp"
#include "surfsing/errors.hpp"

namespace {

using surfsing::Report;

struct Output {
  bool json = false;
};

void add_json_flag(CLI::App* cmd, Output& out) {
  cmd->add_flag("--json", out.json, "Machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of surface singularity computations", "surfsing"};
  app.require_subcommand(1);

  Output out;
  std::function<Report()> action;

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Rebuild the counterexample surface and check every value");
  add_json_flag(verify, out);
  verify->callback([&] { action = [] { return surfsing::commands::reproduce(); }; });

  // check
  std::string graph_file;
  auto* check = app.add_subcommand("check", "Definiteness, fundamental cycles, contractibility, ADE type");
  check->add_option("graph-file", graph_file)->required();
  add_json_flag(check, out);
  check->callback([&] {
    action = [&] { return surfsing::commands::check(surfsing::load_dual_graph(graph_file)); };
  });

  // discrepancy
  std::optional<std::int64_t> ky2_opt;
  auto* disc = app.add_subcommand("discrepancy", "Solve for discrepancies");
  disc->add_option("graph-file", graph_file)->required();
  disc->add_option("--ky2", ky2_opt, "K_Y^2 of the resolution; adds K_X^2 to the report");
  add_json_flag(disc, out);
  disc->callback([&] {
    action = [&] { return surfsing::commands::discrepancy(surfsing::load_dual_graph(graph_file), ky2_opt); };
  });

  // chi
  surfsing::commands::ChiOptions chi_opts;
  auto* chi = app.add_subcommand("chi", "Table of chi(-nK) for n = 0..n-max");
  chi->add_option("graph-file", graph_file)->required();
  chi->add_option("--ky2", chi_opts.ky_squared, "K_Y^2 of the minimal resolution")->required();
  chi->add_option("--chi-oy", chi_opts.chi_oy, "chi(O_Y)")->capture_default_str();
  chi->add_option("--n-max", chi_opts.n_max, "Largest n")->capture_default_str();
  chi->add_flag("--assume-vanishing", chi_opts.assume_vanishing, "Label the column h0");
  chi->add_flag("--show-divisors", chi_opts.show_divisors, "Print the round-up divisors for each n");
  add_json_flag(chi, out);
  chi->callback([&] {
    action = [&] { return surfsing::commands::chi(surfsing::load_dual_graph(graph_file), chi_opts); };
  });

  // tau
  std::int64_t tau_ky2 = 0;
  std::int64_t tau_chi_oy = 1;
  std::int64_t tau_cap = 10;
  auto* tau = app.add_subcommand("tau", "Smallest n with chi(-nK) > 0");
  tau->add_option("graph-file", graph_file)->required();
  tau->add_option("--ky2", tau_ky2, "K_Y^2 of the minimal resolution")->required();
  tau->add_option("--chi-oy", tau_chi_oy, "chi(O_Y)")->capture_default_str();
  tau->add_option("--cap", tau_cap, "Search bound")->capture_default_str();
  add_json_flag(tau, out);
  tau->callback([&] {
    action = [&] {
      return surfsing::commands::tau(surfsing::load_dual_graph(graph_file), tau_ky2, tau_chi_oy, tau_cap);
    };
  });

  // lab
  auto* lab = app.add_subcommand("lab", "Blow-ups of the projective plane");
  lab->require_subcommand(1);
  std::string program_file;
  auto* lab_run = lab->add_subcommand("run", "Execute a blow-up program");
  lab_run->add_option("program-file", program_file)->required();
  add_json_flag(lab_run, out);
  lab_run->callback([&] {
    action = [&] { return surfsing::commands::lab_run(surfsing::load_blowup_program(program_file)); };
  });
  auto* lab_example = lab->add_subcommand("example7", "Run the builtin counterexample program and diff it");
  add_json_flag(lab_example, out);
  lab_example->callback([&] { action = [] { return surfsing::commands::lab_example(); }; });

  // contribution
  std::int64_t r = 1;
  std::int64_t i = 0;
  auto* contrib = app.add_subcommand("contribution", "c_p(D) at a point of type i(1/r(1,-1))");
  contrib->add_option("--r", r, "Group order")->required();
  contrib->add_option("--i", i, "Eigen index in [0, r)")->required();
  add_json_flag(contrib, out);
  contrib->callback([&] { action = [&] { return surfsing::commands::contribution(r, i); }; });

  // bound
  std::string symbol;
  auto* bound = app.add_subcommand("bound", "Worst-case contribution at one ADE point");
  bound->add_option("--type", symbol, "ADE symbol, e.g. A8, D5, E7")->required();
  add_json_flag(bound, out);
  bound->callback([&] {
    action = [&] { return surfsing::commands::bound(surfsing::AdeType::parse(symbol)); };
  });

  // verify-thm9
  auto* thm = app.add_subcommand("verify-thm9", "Check the contribution bound on all 27 baskets");
  add_json_flag(thm, out);
  thm->callback([&] { action = [] { return surfsing::commands::verify_basket_bounds(); }; });

  // h0-bound
  std::string d2_text;
  std::string basket_text;
  auto* h0 = app.add_subcommand("h0-bound", "Lower bound for h0(D) on a Gorenstein rank-one del Pezzo");
  h0->add_option("--d2", d2_text, "D^2 as p/q")->required();
  h0->add_option("--basket", basket_text, "Singularities, e.g. 2A1+2A3")->required();
  add_json_flag(h0, out);
  h0->callback([&] {
    action = [&] {
      return surfsing::commands::h0_bound(surfsing::Rational::parse(d2_text),
                                          surfsing::SingularityBasket::parse(basket_text));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : surfsing::kExitInputError;
  }

  try {
    Report report = action();
    if (out.json) {
      std::cout << report.to_json().dump(2) << '\n';
    } else {
      std::cout << report.render_text();
    }
    return report.exit_status;
  } catch (const surfsing::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return surfsing::kExitInputError;
  } catch (const surfsing::HypothesisError& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return surfsing::kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return surfsing::kExitCheckFailed;
  }
}
