#include "surfsing/picard_lab.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "surfsing/errors.hpp"
#include "text_util.hpp"

namespace surfsing {

Integer PicardLattice::dot(const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b) const {
  if (a.size() != rank() || b.size() != rank()) {
    throw InputError("class has rank " + std::to_string(a.size() != rank() ? a.size() : b.size()) +
                     ", lattice has rank " + std::to_string(rank()));
  }
  Integer sum = Integer(a[0]) * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) sum -= Integer(a[i]) * b[i];
  return sum;
}

std::vector<std::int64_t> PicardLattice::canonical_class() const {
  std::vector<std::int64_t> k(rank(), 1);
  k[0] = -3;
  return k;
}

const CurveClass& LabResult::find(const std::string& name) const {
  for (const auto& c : classes) {
    if (c.name == name) return c;
  }
  throw InputError("unknown curve '" + name + "'");
}

LabResult execute(const BlowupProgram& program) {
  const std::size_t k = program.steps.size();
  const std::size_t rank = k + 1;
  std::vector<CurveClass> classes;
  std::map<std::string, std::size_t> index;

  auto add = [&](const std::string& name, std::vector<std::int64_t> coeffs) {
    if (name.empty()) throw InputError("empty curve name");
    if (!index.emplace(name, classes.size()).second) {
      throw InputError("curve name '" + name + "' is not fresh");
    }
    classes.push_back({name, std::move(coeffs)});
  };

  for (const auto& decl : program.declarations) {
    if (decl.degree < 1) throw InputError("degree of '" + decl.name + "' must be positive");
    std::vector<std::int64_t> coeffs(rank, 0);
    coeffs[0] = decl.degree;
    add(decl.name, std::move(coeffs));
  }

  for (std::size_t s = 0; s < k; ++s) {
    const auto& step = program.steps[s];
    std::set<std::string> seen;
    for (const auto& inc : step.through) {
      auto it = index.find(inc.curve);
      if (it == index.end()) {
        throw InputError("blow-up " + step.exceptional + ": unknown curve '" + inc.curve + "'");
      }
      if (inc.multiplicity < 1) {
        throw InputError("blow-up " + step.exceptional + ": multiplicity of '" + inc.curve +
                         "' must be positive");
      }
      if (!seen.insert(inc.curve).second) {
        throw InputError("blow-up " + step.exceptional + ": '" + inc.curve + "' listed twice");
      }
      classes[it->second].coefficients[s + 1] -= inc.multiplicity;
    }
    std::vector<std::int64_t> coeffs(rank, 0);
    coeffs[s + 1] = 1;
    add(step.exceptional, std::move(coeffs));
  }
  return {PicardLattice(k), std::move(classes)};
}

Integer intersect(const PicardLattice& lattice, const CurveClass& a, const CurveClass& b) {
  return lattice.dot(a.coefficients, b.coefficients);
}

std::vector<std::vector<Integer>> pairwise_intersections(const PicardLattice& lattice,
                                                         const std::vector<CurveClass>& classes) {
  std::vector<std::vector<Integer>> m(classes.size(), std::vector<Integer>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      m[i][j] = m[j][i] = intersect(lattice, classes[i], classes[j]);
    }
  }
  return m;
}

Integer class_arithmetic_genus(const PicardLattice& lattice, const CurveClass& c) {
  Integer twice = lattice.dot(c.coefficients, c.coefficients) +
                  lattice.dot(c.coefficients, lattice.canonical_class());
  return 1 + twice / 2;
}

DualGraph extract_dual_graph(const LabResult& lab, const std::vector<std::string>& contract) {
  std::vector<const CurveClass*> chosen;
  for (const auto& name : contract) chosen.push_back(&lab.find(name));
  DualGraph g;
  for (const auto* c : chosen) g.add_curve(c->name, to_int64(intersect(lab.lattice, *c, *c)));
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      Integer meet = intersect(lab.lattice, *chosen[i], *chosen[j]);
      if (meet < 0) {
        throw InputError("inconsistent program: " + chosen[i]->name + "." + chosen[j]->name +
                         " = " + meet.str() + " < 0");
      }
      if (meet > 0) g.add_meeting(chosen[i]->name, chosen[j]->name, to_int64(meet));
    }
  }
  return g;
}

AmbientInvariants ambient_invariants(const PicardLattice& lattice) {
  const auto k = static_cast<std::int64_t>(lattice.blowups());
  return {9 - k, 1 + k, 1};
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> name_list(const std::string& text) {
  std::vector<std::string> names;
  for (auto& part : detail::split(text, ',')) {
    if (part.empty() || part.find_first_of(" \t") != std::string::npos) {
      throw InputError("bad name list '" + text + "'");
    }
    names.push_back(part);
  }
  return names;
}

// Everything after the first `skip` tokens, rejoined.
std::string rest_of(const std::vector<std::string>& tok, std::size_t skip) {
  std::string out;
  for (std::size_t i = skip; i < tok.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += tok[i];
  }
  return out;
}

}  // namespace

BlowupProgram parse_blowup_program(std::istream& in) {
  BlowupProgram program;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::tokenize_line(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "declare") {
        std::int64_t degree = 0;
        if (tok.size() != 4 || tok[2] != "degree") {
          throw InputError("expected 'declare <name> degree <d>'");
        }
        if (!detail::parse_int64(tok[3], degree)) throw InputError("bad integer '" + tok[3] + "'");
        program.declarations.push_back({tok[1], degree});
      } else if (tok[0] == "blowup") {
        if (tok.size() < 4 || tok[2] != "through") {
          throw InputError("expected 'blowup <exc> through <name>[:<mult>], ...'");
        }
        BlowupStep step{tok[1], {}};
        for (const auto& item : name_list(rest_of(tok, 3))) {
          PointIncidence inc{item, 1};
          if (auto colon = item.find(':'); colon != std::string::npos) {
            inc.curve = item.substr(0, colon);
            if (!detail::parse_int64(item.substr(colon + 1), inc.multiplicity)) {
              throw InputError("bad multiplicity in '" + item + "'");
            }
          }
          step.through.push_back(inc);
        }
        program.steps.push_back(std::move(step));
      } else if (tok[0] == "contract") {
        if (tok.size() < 2) throw InputError("expected 'contract <name>, ...'");
        for (auto& name : name_list(rest_of(tok, 1))) program.contract.push_back(name);
      } else {
        throw InputError("unknown directive '" + tok[0] + "'");
      }
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return program;
}

BlowupProgram parse_blowup_program(const std::string& text) {
  std::istringstream in(text);
  return parse_blowup_program(in);
}

BlowupProgram load_blowup_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_blowup_program(in);
}

std::string format_blowup_program(const BlowupProgram& program) {
  std::ostringstream out;
  for (const auto& d : program.declarations) out << "declare " << d.name << " degree " << d.degree << '\n';
  for (const auto& s : program.steps) {
    out << "blowup " << s.exceptional << " through ";
    for (std::size_t i = 0; i < s.through.size(); ++i) {
      if (i) out << ", ";
      out << s.through[i].curve;
      if (s.through[i].multiplicity != 1) out << ':' << s.through[i].multiplicity;
    }
    out << '\n';
  }
  if (!program.contract.empty()) {
    out << "contract ";
    for (std::size_t i = 0; i < program.contract.size(); ++i) out << (i ? ", " : "") << program.contract[i];
    out << '\n';
  }
  return out.str();
}

BlowupProgram builtin_counterexample_program() {
  BlowupProgram p;
  p.declarations = {{"B", 2}, {"D", 1}, {"A", 1}};
  // Three blow-ups at d = B n D following D; B and D are tangent at d so the
  // second centre still lies on both.
  p.steps.push_back({"L1", {{"B"}, {"D"}}});
  p.steps.push_back({"L2", {{"B"}, {"D"}, {"L1"}}});
  p.steps.push_back({"L3", {{"D"}, {"L2"}}});
  // Five blow-ups at b in A n B following B.
  p.steps.push_back({"M1", {{"B"}, {"A"}}});
  p.steps.push_back({"M2", {{"B"}, {"M1"}}});
  p.steps.push_back({"M3", {{"B"}, {"M2"}}});
  p.steps.push_back({"M4", {{"B"}, {"M3"}}});
  p.steps.push_back({"M5", {{"B"}, {"M4"}}});
  // Five blow-ups at a in A n B following A.
  p.steps.push_back({"N1", {{"A"}, {"B"}}});
  p.steps.push_back({"N2", {{"A"}, {"N1"}}});
  p.steps.push_back({"N3", {{"A"}, {"N2"}}});
  p.steps.push_back({"N4", {{"A"}, {"N3"}}});
  p.steps.push_back({"N5", {{"A"}, {"N4"}}});
  p.contract = {"D", "A", "M1", "M2", "M3", "M4", "L1", "L2", "B", "N1", "N2", "N3", "N4"};
  return p;
}

}  // namespace surfsing
