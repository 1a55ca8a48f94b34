#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfsing/commands.hpp"
#include "surfsing/discrepancy.hpp"
#include "surfsing/dual_graph.hpp"
#include "surfsing/errors.hpp"
#include "surfsing/picard_lab.hpp"
#include "surfsing/riemann_roch.hpp"
#include "surfsing/singular_rr.hpp"

namespace py = pybind11;
using namespace surfsing;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.numerator().str())), py::int_(py::str(q.denominator().str())));
}

Rational from_python(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return Rational::parse(value.cast<std::string>());
  py::object q = py::module_::import("fractions").attr("Fraction")(value);
  return Rational(Integer(py::str(q.attr("numerator")).cast<std::string>()),
                  Integer(py::str(q.attr("denominator")).cast<std::string>()));
}

py::tuple report_tuple(const Report& r, bool as_json) {
  return py::make_tuple(r.exit_status, as_json ? r.to_json().dump(2) : r.render_text());
}

}  // namespace

PYBIND11_MODULE(_surfsing, m) {
  m.doc() = "Exact discrepancy, Riemann-Roch and singularity bound computations for log del Pezzo surfaces.";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  (void)input_error;

  py::class_<DualGraph>(m, "DualGraph")
      .def(py::init<>())
      .def_static("parse", py::overload_cast<const std::string&>(&parse_dual_graph), py::arg("text"))
      .def_static("load", &load_dual_graph, py::arg("path"))
      .def("add_curve", &DualGraph::add_curve, py::arg("id"), py::arg("self_intersection"))
      .def("add_meeting", &DualGraph::add_meeting, py::arg("a"), py::arg("b"), py::arg("multiplicity") = 1)
      .def("__len__", &DualGraph::size)
      .def("curves",
           [](const DualGraph& g) {
             std::vector<std::pair<std::string, std::int64_t>> out;
             for (const auto& c : g.curves()) out.emplace_back(c.id, c.self_intersection);
             return out;
           })
      .def("intersection", py::overload_cast<const std::string&, const std::string&>(&DualGraph::intersection,
                                                                                     py::const_))
      .def("components", &DualGraph::components)
      .def("is_negative_definite", [](const DualGraph& g) { return is_negative_definite(IntersectionMatrix::of(g)); })
      .def("leading_principal_minors",
           [](const DualGraph& g) {
             std::vector<std::string> out;
             for (const auto& d : leading_principal_minors(IntersectionMatrix::of(g))) out.push_back(d.str());
             return out;
           })
      .def("fundamental_cycle", [](const DualGraph& g) { return fundamental_cycle(g).multiplicities(); })
      .def("is_contractible", &is_contractible_to_rational_point)
      .def("classify_ade",
           [](const DualGraph& g) -> std::optional<std::string> {
             auto t = classify_ade(g);
             return t ? std::optional<std::string>(t->str()) : std::nullopt;
           })
      .def("__str__", &format_dual_graph)
      .def("__eq__", [](const DualGraph& a, const DualGraph& b) { return a == b; });

  m.def("discrepancies",
        [](const DualGraph& g) {
          py::dict out;
          for (const auto& c : solve_discrepancies(g).curves) out[py::str(c.id)] = to_fraction(c.alpha);
          return out;
        },
        py::arg("graph"), "Discrepancy of every exceptional curve.");
  m.def("singularity_category", [](const DualGraph& g) { return to_string(solve_discrepancies(g).category); },
        py::arg("graph"));
  m.def("ks_squared",
        [](const DualGraph& g, std::int64_t ky2) { return to_fraction(ks_squared(ky2, solve_discrepancies(g), g)); },
        py::arg("graph"), py::arg("ky_squared"));
  m.def("chi_anti_pluricanonical",
        [](const DualGraph& g, std::int64_t ky2, std::int64_t n, std::int64_t chi_oy) {
          return to_fraction(chi_anti_pluricanonical(SurfaceData::from_graph(g, ky2, chi_oy), n));
        },
        py::arg("graph"), py::arg("ky_squared"), py::arg("n"), py::arg("chi_oy") = 1);
  m.def("tau",
        [](const DualGraph& g, std::int64_t ky2, std::int64_t cap, std::int64_t chi_oy) {
          return tau(SurfaceData::from_graph(g, ky2, chi_oy), cap);
        },
        py::arg("graph"), py::arg("ky_squared"), py::arg("cap") = 10, py::arg("chi_oy") = 1);

  m.def("cyclic_contribution",
        [](std::int64_t r, std::int64_t i) { return to_fraction(cyclic_contribution(r, i)); }, py::arg("r"),
        py::arg("i"));
  m.def("worst_case_bound", [](const std::string& type) { return to_fraction(worst_case_bound(AdeType::parse(type))); },
        py::arg("type"));
  m.def("basket_bound",
        [](const std::string& basket) {
          return to_fraction(verify_basket_bound(SingularityBasket::parse(basket)).sum);
        },
        py::arg("basket"));
  m.def("gorenstein_rank_one_baskets", [] {
    std::vector<std::string> out;
    for (const auto& b : gorenstein_rank_one_baskets()) out.push_back(b.str());
    return out;
  });
  m.def("h0_lower_bound",
        [](const py::handle& d2, const std::string& basket) {
          return to_fraction(h0_lower_bound(from_python(d2), SingularityBasket::parse(basket)));
        },
        py::arg("d_squared"), py::arg("basket"));

  m.def("builtin_counterexample_program", [] { return format_blowup_program(builtin_counterexample_program()); });
  m.def("run_blowup_program",
        [](const std::string& text) {
          auto program = parse_blowup_program(text);
          auto lab = execute(program);
          py::dict self;
          for (const auto& c : lab.classes) self[py::str(c.name)] = intersect(lab.lattice, c, c).convert_to<long long>();
          return py::make_tuple(self, extract_dual_graph(lab, program.contract));
        },
        py::arg("text"), "Self-intersections of every curve and the dual graph of the contracted curves.");

  m.def("reproduce", [](bool as_json) { return report_tuple(commands::reproduce(), as_json); },
        py::arg("json") = false, "Full reproduction report as (exit_status, text).");
}
