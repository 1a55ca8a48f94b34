#include "surfsing/dual_graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "surfsing/errors.hpp"
#include "text_util.hpp"

namespace surfsing {

// ---------------------------------------------------------------------------
// DualGraph

void DualGraph::add_curve(const std::string& id, std::int64_t self_intersection) {
  if (id.empty()) throw InputError("empty curve id");
  if (contains(id)) throw InputError("duplicate curve id '" + id + "'");
  index_.emplace(id, curves_.size());
  curves_.push_back({id, self_intersection});
}

void DualGraph::add_meeting(const std::string& a, const std::string& b, std::int64_t multiplicity) {
  std::size_t i = index_of(a);
  std::size_t j = index_of(b);
  if (i == j) throw InputError("curve '" + a + "' cannot meet itself");
  if (multiplicity < 1) {
    throw InputError("multiplicity of " + a + "." + b + " must be >= 1");
  }
  auto key = std::minmax(i, j);
  if (!edges_.emplace(key, multiplicity).second) {
    throw InputError("intersection " + a + "." + b + " given twice");
  }
}

std::size_t DualGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown curve '" + id + "'");
  return it->second;
}

std::int64_t DualGraph::intersection(std::size_t i, std::size_t j) const {
  if (i == j) return curves_.at(i).self_intersection;
  auto it = edges_.find(std::minmax(i, j));
  return it == edges_.end() ? 0 : it->second;
}

std::int64_t DualGraph::intersection(const std::string& a, const std::string& b) const {
  return intersection(index_of(a), index_of(b));
}

std::vector<std::size_t> DualGraph::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [key, mult] : edges_) {
    if (key.first == i) out.push_back(key.second);
    if (key.second == i) out.push_back(key.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DualGraph> DualGraph::components() const {
  std::vector<int> label(size(), -1);
  int count = 0;
  for (std::size_t start = 0; start < size(); ++start) {
    if (label[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    label[start] = count;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : neighbours(v)) {
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<DualGraph> out;
  for (int c = 0; c < count; ++c) {
    std::vector<std::string> ids;
    for (std::size_t v = 0; v < size(); ++v) {
      if (label[v] == c) ids.push_back(curves_[v].id);
    }
    out.push_back(subgraph(ids));
  }
  return out;
}

bool DualGraph::is_connected() const { return components().size() <= 1; }

DualGraph DualGraph::subgraph(const std::vector<std::string>& ids) const {
  std::vector<bool> keep(size(), false);
  for (const auto& id : ids) keep[index_of(id)] = true;
  DualGraph out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (keep[v]) out.add_curve(curves_[v].id, curves_[v].self_intersection);
  }
  for (const auto& [key, mult] : edges_) {
    if (keep[key.first] && keep[key.second]) {
      out.add_meeting(curves_[key.first].id, curves_[key.second].id, mult);
    }
  }
  return out;
}

bool DualGraph::is_minimal() const {
  return std::all_of(curves_.begin(), curves_.end(),
                     [](const Curve& c) { return -2 - c.self_intersection >= 0; });
}

// ---------------------------------------------------------------------------
// Matrices and definiteness

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<Integer>> entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw InputError("intersection matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries_[i][j] != entries_[j][i]) {
        throw InputError("intersection matrix is not symmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
    }
  }
}

IntersectionMatrix IntersectionMatrix::of(const DualGraph& g) {
  std::vector<std::vector<Integer>> m(g.size(), std::vector<Integer>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g.intersection(i, j);
  }
  return IntersectionMatrix(std::move(m));
}

Integer determinant(const std::vector<std::vector<Integer>>& input) {
  auto a = input;
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Integer> leading_principal_minors(const IntersectionMatrix& m) {
  std::vector<Integer> minors;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<Integer>> block(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) block[i][j] = m.at(i, j);
    }
    minors.push_back(determinant(block));
  }
  return minors;
}

std::vector<Rational> elimination_pivots(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
  }
  std::vector<Rational> pivots;
  for (std::size_t k = 0; k < n; ++k) {
    pivots.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return pivots;
}

DefinitenessReport definiteness(const IntersectionMatrix& m) {
  DefinitenessReport report;
  report.minors = leading_principal_minors(m);
  for (std::size_t k = 1; k <= report.minors.size(); ++k) {
    const Integer& d = report.minors[k - 1];
    bool ok = (k % 2 == 1) ? d < 0 : d > 0;
    if (!ok) {
      report.failing_minor = k;
      break;
    }
  }
  report.negative_definite = !report.failing_minor.has_value();
  return report;
}

bool is_negative_definite(const IntersectionMatrix& m) { return definiteness(m).negative_definite; }

// ---------------------------------------------------------------------------
// Cycles

std::int64_t canonical_intersection(const DualGraph& g, const std::string& id) {
  return -2 - g.intersection(id, id);
}

Cycle::Cycle(std::map<std::string, std::int64_t> multiplicities) {
  for (const auto& [id, m] : multiplicities) {
    if (m < 0) throw InputError("negative multiplicity for '" + id + "' in cycle");
    if (m > 0) mult_.emplace(id, m);
  }
  if (mult_.empty()) throw InputError("cycle has no positive multiplicity");
}

std::int64_t Cycle::multiplicity(const std::string& id) const {
  auto it = mult_.find(id);
  return it == mult_.end() ? 0 : it->second;
}

namespace {

void require_support(const DualGraph& g, const Cycle& z) {
  for (const auto& [id, m] : z.multiplicities()) {
    if (!g.contains(id)) throw InputError("cycle component '" + id + "' is not a vertex");
  }
}

}  // namespace

Integer cycle_dot_curve(const DualGraph& g, const Cycle& z, std::size_t j) {
  Integer sum = 0;
  for (const auto& [id, m] : z.multiplicities()) sum += Integer(m) * g.intersection(g.index_of(id), j);
  return sum;
}

Integer cycle_square(const DualGraph& g, const Cycle& z) {
  Integer sum = 0;
  for (const auto& [id, m] : z.multiplicities()) sum += Integer(m) * cycle_dot_curve(g, z, g.index_of(id));
  return sum;
}

Rational arithmetic_genus(const DualGraph& g, const Cycle& z) {
  require_support(g, z);
  Integer z_dot_k = 0;
  for (const auto& [id, m] : z.multiplicities()) z_dot_k += Integer(m) * canonical_intersection(g, id);
  return Rational(1) + Rational(cycle_square(g, z) + z_dot_k) / 2;
}

Cycle fundamental_cycle(const DualGraph& g) {
  if (g.empty()) throw InputError("fundamental cycle of an empty graph");
  if (!g.is_connected()) throw InputError("fundamental cycle needs a connected graph");
  if (!is_negative_definite(IntersectionMatrix::of(g))) {
    throw InputError("fundamental cycle needs a negative definite graph");
  }
  std::map<std::string, std::int64_t> mult;
  for (const auto& c : g.curves()) mult[c.id] = 1;

  // Candidates are scanned in lexicographic id order (std::map order).
  while (true) {
    Cycle z(mult);
    const std::string* bump = nullptr;
    for (const auto& [id, m] : mult) {
      if (cycle_dot_curve(g, z, g.index_of(id)) > 0) {
        bump = &id;
        break;
      }
    }
    if (bump == nullptr) return z;
    ++mult[*bump];
  }
}

bool is_contractible_to_rational_point(const DualGraph& g) {
  for (const auto& component : g.components()) {
    if (!is_negative_definite(IntersectionMatrix::of(component))) return false;
    if (arithmetic_genus(component, fundamental_cycle(component)) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ADE recognition

std::optional<AdeType> classify_ade(const DualGraph& g) {
  const std::size_t n = g.size();
  if (n == 0 || !g.is_connected()) return std::nullopt;
  for (const auto& c : g.curves()) {
    if (c.self_intersection != -2) return std::nullopt;
  }
  for (const auto& [key, mult] : g.edges()) {
    if (mult != 1) return std::nullopt;
  }
  if (g.edges().size() != n - 1) return std::nullopt;  // not a tree

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    auto deg = g.neighbours(v).size();
    if (deg > 3) return std::nullopt;
    if (deg == 3) branch.push_back(v);
  }
  if (branch.empty()) return AdeType(AdeFamily::A, static_cast<int>(n));
  if (branch.size() > 1) return std::nullopt;

  // Walk each leg from the branch vertex to its end.
  std::vector<int> legs;
  for (std::size_t start : g.neighbours(branch[0])) {
    int length = 1;
    std::size_t prev = branch[0];
    std::size_t cur = start;
    while (true) {
      auto next = g.neighbours(cur);
      if (next.size() == 1) break;
      std::size_t step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
      ++length;
    }
    legs.push_back(length);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return AdeType(AdeFamily::D, static_cast<int>(n));
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
    return AdeType(AdeFamily::E, static_cast<int>(n));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

DualGraph parse_dual_graph(std::istream& in) {
  DualGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::tokenize_line(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "curve") {
        std::int64_t self = 0;
        if (tok.size() != 3) throw InputError("expected 'curve <id> <self-intersection>'");
        if (!detail::parse_int64(tok[2], self)) throw InputError("bad integer '" + tok[2] + "'");
        g.add_curve(tok[1], self);
      } else if (tok[0] == "meet") {
        std::int64_t mult = 1;
        if (tok.size() != 3 && tok.size() != 4) {
          throw InputError("expected 'meet <id> <id> [<multiplicity>]'");
        }
        if (tok.size() == 4 && !detail::parse_int64(tok[3], mult)) {
          throw InputError("bad integer '" + tok[3] + "'");
        }
        g.add_meeting(tok[1], tok[2], mult);
      } else {
        throw InputError("unknown directive '" + tok[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return g;
}

DualGraph parse_dual_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_dual_graph(in);
}

DualGraph load_dual_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_dual_graph(in);
}

std::string format_dual_graph(const DualGraph& g) {
  std::ostringstream out;
  for (const auto& c : g.curves()) out << "curve " << c.id << ' ' << c.self_intersection << '\n';
  for (const auto& [key, mult] : g.edges()) {
    out << "meet " << g.curves()[key.first].id << ' ' << g.curves()[key.second].id;
    if (mult != 1) out << ' ' << mult;
    out << '\n';
  }
  return out.str();
}

}  // namespace surfsing
