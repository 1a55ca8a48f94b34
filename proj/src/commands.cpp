#include "surfsing/commands.hpp"

#include <algorithm>
#include <set>

#include "surfsing/discrepancy.hpp"
#include "surfsing/errors.hpp"
#include "surfsing/riemann_roch.hpp"

namespace surfsing::commands {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string format_class(const CurveClass& c) {
  std::string out;
  auto term = [&](std::int64_t coeff, const std::string& basis) {
    if (coeff == 0) return;
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (out.empty()) {
      out += coeff < 0 ? "-" : "";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += basis;
  };
  term(c.coefficients[0], "H");
  for (std::size_t i = 1; i < c.coefficients.size(); ++i) term(c.coefficients[i], "e" + std::to_string(i));
  return out.empty() ? "0" : out;
}

// Multiplicities in graph vertex order, e.g. "D:1 A:1 M1:1".
std::string format_cycle(const DualGraph& g, const Cycle& z) {
  std::vector<std::string> parts;
  for (const auto& c : g.curves()) parts.push_back(c.id + ":" + std::to_string(z.multiplicity(c.id)));
  return join(parts, " ");
}

std::string format_minors(const std::vector<Integer>& minors) {
  std::vector<std::string> parts;
  for (const auto& m : minors) parts.push_back(m.str());
  return join(parts, ", ");
}

std::vector<std::string> ids_of(const DualGraph& g) {
  std::vector<std::string> out;
  for (const auto& c : g.curves()) out.push_back(c.id);
  return out;
}

Table discrepancy_table(const DiscrepancyReport& report) {
  Table t{{"curve", "E^2", "K.E", "alpha"}, {}};
  for (const auto& c : report.curves) {
    t.rows.push_back({c.id, std::to_string(c.self_intersection), std::to_string(c.k_dot_e), c.alpha.str()});
  }
  return t;
}

void component_section(Report& report, const DualGraph& component, std::size_t index) {
  auto def = definiteness(IntersectionMatrix::of(component));
  std::optional<Cycle> z;
  Rational genus;
  bool contractible = false;
  if (def.negative_definite) {
    z = fundamental_cycle(component);
    genus = arithmetic_genus(component, *z);
    contractible = genus == 0;
  }
  auto ade = classify_ade(component);

  Section& s = report.add_check(
      "component " + std::to_string(index + 1) + ": " + join(ids_of(component), " "), contractible);
  s.fields.emplace_back("negative definite", yes_no(def.negative_definite));
  s.fields.emplace_back("leading minors", format_minors(def.minors));
  if (def.failing_minor) {
    s.diffs.push_back("leading minor d_" + std::to_string(*def.failing_minor) + " = " +
                      def.minors[*def.failing_minor - 1].str() + " has the wrong sign");
  }
  s.fields.emplace_back("fundamental cycle", z ? format_cycle(component, *z) : "n/a");
  s.fields.emplace_back("p_a(Z)", z ? genus.str() : "n/a");
  s.fields.emplace_back("contractible", yes_no(contractible));
  s.fields.emplace_back("ADE type", ade ? ade->str() : "not canonical");
}

}  // namespace

// ---------------------------------------------------------------------------

Report check(const DualGraph& g) {
  Report report;
  auto components = g.components();
  Section& s = report.add("graph");
  s.fields.emplace_back("curves", std::to_string(g.size()));
  s.fields.emplace_back("components", std::to_string(components.size()));
  s.fields.emplace_back("minimal resolution", yes_no(g.is_minimal()));
  for (std::size_t i = 0; i < components.size(); ++i) component_section(report, components[i], i);
  Section& verdict = report.add("verdict");
  verdict.fields.emplace_back("contractible to rational points",
                              yes_no(report.exit_status == kExitOk && !g.empty()));
  if (g.empty()) report.exit_status = kExitCheckFailed;
  return report;
}

Report discrepancy(const DualGraph& g, std::optional<std::int64_t> ky_squared) {
  auto solved = solve_discrepancies(g);
  Report report;
  Section& s = report.add("discrepancies");
  s.table = discrepancy_table(solved);
  s.fields.emplace_back("category", to_string(solved.category));
  s.fields.emplace_back("denominator lcm", solved.denominator_lcm.str());
  if (ky_squared) s.fields.emplace_back("K_S^2", surfsing::ks_squared(*ky_squared, solved, g).str());
  if (!solved.minimal_resolution) {
    s.notes.push_back("non-minimal resolution: the graph contains (-1)-curves");
  }
  s.notes.push_back("denominator lcm bounds the index of K from below; it is not the index");
  return report;
}

Report chi(const DualGraph& g, const ChiOptions& options) {
  auto surface = SurfaceData::from_graph(g, options.ky_squared, options.chi_oy);
  auto rows = chi_table(surface, options.n_max);
  Report report;
  Section& s = report.add(options.assume_vanishing ? "h0(-nK)" : "chi(-nK)");
  s.table = Table{{"n", options.assume_vanishing ? "h0" : "chi"}, {}};
  for (const auto& [n, value] : rows) s.table->rows.push_back({std::to_string(n), value.str()});
  s.fields.emplace_back("K_Y^2", std::to_string(options.ky_squared));
  s.fields.emplace_back("chi(O_Y)", std::to_string(options.chi_oy));
  s.fields.emplace_back("K_X^2", ks_squared(options.ky_squared, surface.report(), g).str());
  if (options.assume_vanishing) {
    s.notes.push_back("h0 = chi assumes higher cohomology of -nK vanishes (log del Pezzo)");
  }
  if (options.show_divisors) {
    Section& d = report.add("auxiliary divisors");
    d.table = Table{{"n", "C = round_up((n+1) alpha)", "B = C - (n+1) alpha", "B in [0,1)"}, {}};
    for (const auto& [n, value] : rows) {
      auto aux = auxiliary_divisors(surface, n);
      d.table->rows.push_back({std::to_string(n), aux.correction.str(), aux.fractional.str(),
                               yes_no(aux.fractional_in_unit_interval)});
    }
  }
  return report;
}

Report tau(const DualGraph& g, std::int64_t ky_squared, std::int64_t chi_oy, std::int64_t cap) {
  auto surface = SurfaceData::from_graph(g, ky_squared, chi_oy);
  auto value = surfsing::tau(surface, cap);
  Report report;
  Section& s = report.add("tau");
  s.fields.emplace_back("tau", value ? std::to_string(*value) : "exceeds cap");
  s.fields.emplace_back("cap", std::to_string(cap));
  s.notes.push_back("first n with chi(-nK) > 0; reading chi as h0 assumes a log del Pezzo surface");
  return report;
}

// ---------------------------------------------------------------------------

Report lab_run(const BlowupProgram& program) {
  auto lab = execute(program);
  Report report;

  Section& classes = report.add("classes");
  classes.table = Table{{"curve", "class", "C^2", "K.C", "p_a"}, {}};
  const CurveClass canonical{"K", lab.lattice.canonical_class()};
  for (const auto& c : lab.classes) {
    classes.table->rows.push_back({c.name, format_class(c), intersect(lab.lattice, c, c).str(),
                                   intersect(lab.lattice, c, canonical).str(),
                                   class_arithmetic_genus(lab.lattice, c).str()});
  }

  Section& pairs = report.add("intersections");
  pairs.table = Table{{""}, {}};
  for (const auto& c : lab.classes) pairs.table->headers.push_back(c.name);
  auto m = pairwise_intersections(lab.lattice, lab.classes);
  for (std::size_t i = 0; i < lab.classes.size(); ++i) {
    std::vector<std::string> row{lab.classes[i].name};
    for (const auto& v : m[i]) row.push_back(v.str());
    pairs.table->rows.push_back(std::move(row));
  }

  auto inv = ambient_invariants(lab.lattice);
  if (!program.contract.empty()) {
    Section& graph = report.add("dual graph");
    graph.verbatim = format_dual_graph(extract_dual_graph(lab, program.contract));
  }
  Section& amb = report.add("ambient invariants");
  amb.fields.emplace_back("K_Y^2", std::to_string(inv.ky_squared));
  amb.fields.emplace_back("picard rank", std::to_string(inv.picard_rank));
  amb.fields.emplace_back("chi(O_Y)", std::to_string(inv.chi_oy));
  if (!program.contract.empty()) {
    amb.fields.emplace_back("picard rank after contraction",
                            std::to_string(inv.picard_rank - static_cast<std::int64_t>(program.contract.size())));
  }
  return report;
}

namespace {

// Shared driver for `lab example7` and `verify-paper`. Each stage appends
// one check; stages whose inputs failed to build are reported as failed.
class CounterexampleRun {
 public:
  CounterexampleRun(const CounterexampleReference& ref, const BlowupProgram& program)
      : ref_(ref), program_(program) {}

  Report& report() { return report_; }

  void lab_checks() {
    try {
      lab_ = execute(program_);
    } catch (const InputError& e) {
      report_.add_check("blow-up program", false).diffs.push_back(e.what());
      return;
    }
    self_intersections();
    rational_curves();
    configuration();
    picard_numbers();
  }

  void discrepancy_checks() {
    if (!require_graph("discrepancies")) return;
    try {
      solved_ = solve_discrepancies(*graph_);
    } catch (const HypothesisError& e) {
      report_.add_check("discrepancies", false).diffs.push_back(e.what());
      return;
    }
    std::vector<std::string> diffs;
    for (const auto& c : solved_->curves) {
      auto it = ref_.discrepancies.find(c.id);
      if (it == ref_.discrepancies.end()) {
        diffs.push_back(c.id + ": no reference value, got " + c.alpha.str());
      } else if (it->second != c.alpha) {
        diffs.push_back(c.id + ": expected " + it->second.str() + ", got " + c.alpha.str());
      }
    }
    for (const auto& [id, value] : ref_.discrepancies) {
      if (!graph_->contains(id)) diffs.push_back(id + ": expected " + value.str() + ", curve missing");
    }
    Rational residual = discrepancy_residual(*graph_, *solved_);
    if (residual != 0) diffs.push_back("linear system residual " + residual.str());
    bool log_terminal = solved_->category == SingularityCategory::LogTerminal;
    if (!log_terminal) diffs.push_back("category " + to_string(solved_->category));

    Section& s = report_.add_check("discrepancies", diffs.empty());
    s.table = discrepancy_table(*solved_);
    s.fields.emplace_back("residual", residual.str());
    s.fields.emplace_back("category", to_string(solved_->category));
    s.fields.emplace_back("denominator lcm", solved_->denominator_lcm.str());
    s.diffs = std::move(diffs);

    Rational ks2 = ks_squared(ambient_.ky_squared, *solved_, *graph_);
    Section& k = report_.add_check("K_S^2", ks2 == ref_.ks_squared && ks2 > 0);
    k.fields.emplace_back("K_Y^2", std::to_string(ambient_.ky_squared));
    k.fields.emplace_back("correction", solved_->ks_squared_correction.str());
    k.fields.emplace_back("K_S^2", ks2.str());
    if (ks2 != ref_.ks_squared) {
      k.diffs.push_back("expected " + ref_.ks_squared.str() + ", got " + ks2.str());
    }
  }

  void contraction_checks() {
    if (!graph_) {
      for (const char* title : {"negative definiteness", "contractibility"}) {
        report_.add_check(title, false).diffs.push_back("no dual graph available");
      }
      return;
    }
    KeyValues nd_fields;
    KeyValues ct_fields;
    std::vector<std::string> nd_diffs;
    std::vector<std::string> ct_diffs;
    auto components = graph_->components();
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& comp = components[i];
      const std::string label = "component " + std::to_string(i + 1);
      auto def = definiteness(IntersectionMatrix::of(comp));
      nd_fields.emplace_back(label + " minors", format_minors(def.minors));
      if (!def.negative_definite) {
        nd_diffs.push_back(label + ": leading minor d_" + std::to_string(*def.failing_minor) +
                           " has the wrong sign");
        ct_diffs.push_back(label + ": not negative definite");
        continue;
      }
      auto z = fundamental_cycle(comp);
      auto genus = arithmetic_genus(comp, z);
      ct_fields.emplace_back(label + " fundamental cycle", format_cycle(comp, z));
      ct_fields.emplace_back(label + " p_a", genus.str());
      if (genus > 0) ct_diffs.push_back(label + ": p_a = " + genus.str() + " > 0");
    }
    bool contractible = is_contractible_to_rational_point(*graph_);
    if (!contractible && ct_diffs.empty()) ct_diffs.push_back("configuration is not contractible");

    Section& nd = report_.add_check("negative definiteness", nd_diffs.empty());
    nd.fields = std::move(nd_fields);
    nd.diffs = std::move(nd_diffs);
    Section& ct = report_.add_check("contractibility", ct_diffs.empty());
    ct.fields = std::move(ct_fields);
    ct.fields.emplace_back("contractible", yes_no(contractible));
    ct.diffs = std::move(ct_diffs);
  }

  void riemann_roch_checks() {
    if (!solved_) {
      report_.add_check("chi(-nK_S)", false).diffs.push_back("no discrepancies available");
      report_.add_check("tau", false).diffs.push_back("no discrepancies available");
      return;
    }
    std::optional<SurfaceData> surface;
    try {
      surface.emplace(*graph_, *solved_, ambient_.ky_squared, ambient_.chi_oy);
    } catch (const HypothesisError& e) {
      report_.add_check("chi(-nK_S)", false).diffs.push_back(e.what());
      report_.add_check("tau", false).diffs.push_back(e.what());
      return;
    }

    const auto n_max = static_cast<std::int64_t>(ref_.chi.size()) - 1;
    std::vector<std::string> diffs;
    Table t{{"n", "chi", "round-up remainder in [0,1)"}, {}};
    for (std::int64_t n = 0; n <= n_max; ++n) {
      Rational value = chi_anti_pluricanonical(*surface, n);
      bool unit = auxiliary_divisors(*surface, n).fractional_in_unit_interval;
      t.rows.push_back({std::to_string(n), value.str(), yes_no(unit)});
      const Rational& want = ref_.chi[static_cast<std::size_t>(n)];
      if (value != want) {
        diffs.push_back("n = " + std::to_string(n) + ": expected " + want.str() + ", got " + value.str());
      }
      if (!unit) diffs.push_back("n = " + std::to_string(n) + ": remainder outside [0, 1)");
    }
    Section& s = report_.add_check("chi(-nK_S)", diffs.empty());
    s.table = std::move(t);
    s.diffs = std::move(diffs);

    std::optional<std::int64_t> value;
    std::string error;
    try {
      value = surfsing::tau(*surface, 10);
    } catch (const HypothesisError& e) {
      error = e.what();
    }
    Section& tau_s = report_.add_check("tau", error.empty() && value == ref_.tau);
    tau_s.fields.emplace_back("tau", value ? std::to_string(*value) : "exceeds cap");
    tau_s.fields.emplace_back("cap", "10");
    if (!error.empty()) {
      tau_s.diffs.push_back(error);
    } else if (value != ref_.tau) {
      tau_s.diffs.push_back("expected " + std::to_string(ref_.tau) + ", got " +
                            (value ? std::to_string(*value) : "exceeds cap"));
    }
  }

  void basket_checks() {
    auto all = verify_all_basket_bounds();
    bool unique_minimum = all.minimum == contribution_floor() && all.minimizers.size() == 1 &&
                          all.minimizers[0] == "2A1+2A3";
    Section& s = report_.add_check("basket bounds", all.all_pass && unique_minimum);
    s.table = basket_table(all);
    s.fields.emplace_back("baskets", std::to_string(all.rows.size()));
    s.fields.emplace_back("threshold", contribution_floor().str());
    s.fields.emplace_back("minimum", all.minimum.str());
    s.fields.emplace_back("attained by", join(all.minimizers, ", "));
    if (!all.all_pass) s.diffs.push_back("some basket falls below the threshold");
    if (!unique_minimum) s.diffs.push_back("minimum is not attained uniquely by 2A1+2A3");
  }

  static Table basket_table(const BasketBoundReport& all) {
    Table t{{"basket", "sum of bounds", "status"}, {}};
    for (const auto& row : all.rows) {
      t.rows.push_back({row.basket.str(), row.sum.str(), row.passes ? "PASS" : "FAIL"});
    }
    return t;
  }

  void assumptions() {
    Section& s = report_.add("assumptions");
    s.notes.push_back("chi = h0 relies on Kawamata-Viehweg vanishing; it is not computed");
    s.notes.push_back("-K_S ample is taken from K_S^2 > 0 on a rational surface of Picard number one");
    s.notes.push_back("the intersection point of A and D is never blown up");
  }

  void summary() {
    std::size_t total = 0;
    std::size_t passed = 0;
    for (const auto& s : report_.sections) {
      if (!s.passed) continue;
      ++total;
      if (*s.passed) ++passed;
    }
    Section& s = report_.add("summary");
    s.fields.emplace_back("checks passed", std::to_string(passed) + "/" + std::to_string(total));
    s.fields.emplace_back("verdict", passed == total ? "PASS" : "FAIL");
  }

 private:
  bool require_graph(const std::string& title) {
    if (graph_) return true;
    report_.add_check(title, false).diffs.push_back("no dual graph available");
    return false;
  }

  void self_intersections() {
    std::vector<std::string> diffs;
    Table t{{"curve", "C^2"}, {}};
    for (const auto& c : lab_->classes) {
      auto self = intersect(lab_->lattice, c, c);
      t.rows.push_back({c.name, self.str()});
      auto it = ref_.self_intersections.find(c.name);
      if (it == ref_.self_intersections.end()) {
        diffs.push_back(c.name + ": unexpected curve");
      } else if (self != it->second) {
        diffs.push_back(c.name + ": expected " + std::to_string(it->second) + ", got " + self.str());
      }
    }
    for (const auto& [name, value] : ref_.self_intersections) {
      bool found = std::any_of(lab_->classes.begin(), lab_->classes.end(),
                               [&](const CurveClass& c) { return c.name == name; });
      if (!found) diffs.push_back(name + ": missing");
    }
    Section& s = report_.add_check("self-intersections", diffs.empty());
    s.table = std::move(t);
    s.diffs = std::move(diffs);
  }

  void rational_curves() {
    std::vector<std::string> diffs;
    for (const auto& c : lab_->classes) {
      auto genus = class_arithmetic_genus(lab_->lattice, c);
      if (genus != 0) diffs.push_back(c.name + ": p_a = " + genus.str());
    }
    Section& s = report_.add_check("strict transforms are rational", diffs.empty());
    s.fields.emplace_back("curves", std::to_string(lab_->classes.size()));
    s.diffs = std::move(diffs);
  }

  void configuration() {
    try {
      graph_ = extract_dual_graph(*lab_, program_.contract);
    } catch (const InputError& e) {
      report_.add_check("contracted configuration", false).diffs.push_back(e.what());
      return;
    }
    std::vector<std::string> diffs;
    std::set<std::pair<std::string, std::string>> expected;
    for (const auto& [a, b] : ref_.edges) expected.insert(std::minmax(a, b));
    const auto& curves = graph_->curves();
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (std::size_t j = i + 1; j < curves.size(); ++j) {
        auto key = std::minmax(curves[i].id, curves[j].id);
        std::int64_t want = expected.count(key) ? 1 : 0;
        std::int64_t got = graph_->intersection(i, j);
        if (got != want) {
          diffs.push_back(curves[i].id + "." + curves[j].id + ": expected " + std::to_string(want) +
                          ", got " + std::to_string(got));
        }
      }
    }
    std::vector<std::vector<std::string>> got_components;
    for (const auto& comp : graph_->components()) got_components.push_back(ids_of(comp));
    if (got_components != ref_.components) diffs.push_back("components differ from the reference chains");

    Section& s = report_.add_check("contracted configuration", diffs.empty());
    for (std::size_t i = 0; i < got_components.size(); ++i) {
      s.fields.emplace_back("component " + std::to_string(i + 1), join(got_components[i], " - "));
    }
    s.diffs = std::move(diffs);
    s.verbatim = format_dual_graph(*graph_);
  }

  void picard_numbers() {
    ambient_ = ambient_invariants(lab_->lattice);
    const auto contracted = static_cast<std::int64_t>(program_.contract.size());
    const std::int64_t rho_surface = ambient_.picard_rank - contracted;
    std::vector<std::string> diffs;
    auto cmp = [&](const std::string& what, std::int64_t want, std::int64_t got) {
      if (want != got) {
        diffs.push_back(what + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
      }
    };
    cmp("K_Y^2", ref_.ky_squared, ambient_.ky_squared);
    cmp("rho(resolution)", ref_.picard_rank_resolution, ambient_.picard_rank);
    cmp("rho(surface)", ref_.picard_rank_surface, rho_surface);
    Section& s = report_.add_check("ambient invariants", diffs.empty());
    s.fields.emplace_back("K_Y^2", std::to_string(ambient_.ky_squared));
    s.fields.emplace_back("rho(resolution)", std::to_string(ambient_.picard_rank));
    s.fields.emplace_back("contracted curves", std::to_string(contracted));
    s.fields.emplace_back("rho(surface)", std::to_string(rho_surface));
    s.fields.emplace_back("chi(O_Y)", std::to_string(ambient_.chi_oy));
    s.diffs = std::move(diffs);
  }

  const CounterexampleReference& ref_;
  const BlowupProgram& program_;
  Report report_;
  std::optional<LabResult> lab_;
  std::optional<DualGraph> graph_;
  std::optional<DiscrepancyReport> solved_;
  AmbientInvariants ambient_;
};

}  // namespace

Report lab_example(const CounterexampleReference& ref, const BlowupProgram& program) {
  CounterexampleRun run(ref, program);
  run.lab_checks();
  run.discrepancy_checks();
  run.summary();
  return std::move(run.report());
}

Report reproduce(const CounterexampleReference& ref, const BlowupProgram& program) {
  CounterexampleRun run(ref, program);
  run.lab_checks();
  run.contraction_checks();
  run.discrepancy_checks();
  run.riemann_roch_checks();
  run.basket_checks();
  run.assumptions();
  run.summary();
  return std::move(run.report());
}

// ---------------------------------------------------------------------------

Report contribution(std::int64_t r, std::int64_t i) {
  auto value = cyclic_contribution(r, i);
  Report report;
  Section& s = report.add("contribution");
  s.fields.emplace_back("type", std::to_string(i) + "(1/" + std::to_string(r) + "(1,-1))");
  s.fields.emplace_back("c_p", value.str());
  return report;
}

Report bound(const AdeType& type) {
  Report report;
  Section& s = report.add("bound");
  s.fields.emplace_back("type", type.str());
  s.fields.emplace_back("bound", worst_case_bound(type).str());
  std::string via;
  switch (type.family()) {
    case AdeFamily::A:
      via = "min over i of -i(n-i)/2n with n = " + std::to_string(type.index() + 1);
      break;
    case AdeFamily::D: via = "cover row (3): 2 points x -1/4"; break;
    case AdeFamily::E:
      via = type.index() == 6   ? "cover row (4): 2 points x -1/3"
            : type.index() == 7 ? "cover row (6): 3 points x -1/4"
                                : "no cover; D is Cartier at an E8 point";
      break;
  }
  s.fields.emplace_back("via", via);
  return report;
}

Report verify_basket_bounds() {
  auto all = verify_all_basket_bounds();
  Report report;
  Section& s = report.add_check("basket bounds", all.all_pass);
  s.table = CounterexampleRun::basket_table(all);
  s.fields.emplace_back("threshold", contribution_floor().str());
  s.fields.emplace_back("minimum", all.minimum.str());
  s.fields.emplace_back("attained by", join(all.minimizers, ", "));
  return report;
}

Report h0_bound(const Rational& d_squared, const SingularityBasket& basket) {
  auto bound = verify_basket_bound(basket);
  Report report;
  Section& s = report.add("h0 lower bound");
  s.fields.emplace_back("D^2", d_squared.str());
  s.fields.emplace_back("basket", basket.str());
  s.fields.emplace_back("listed basket", yes_no(bound.listed));
  s.fields.emplace_back("sum of bounds", bound.sum.str());
  s.fields.emplace_back("h0 >=", h0_lower_bound(d_squared, basket).str());
  s.notes.push_back("assumes chi(O_X) = 1 and D.(-K) >= 1 (D nef and big, X Gorenstein, rho = 1)");
  if (!bound.listed) s.notes.push_back("basket is not one of the 27 Gorenstein rank-one baskets");
  return report;
}

}  // namespace surfsing::commands
