#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfsing/ade.hpp"
#include "surfsing/rational.hpp"

namespace surfsing {

/// A smooth rational exceptional curve and its self-intersection.
struct Curve {
  std::string id;
  std::int64_t self_intersection;

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Weighted dual graph of a configuration of smooth rational curves.
///
/// Vertices keep their insertion order; that order indexes the intersection
/// matrix and fixes every printed report. Edges carry positive
/// multiplicities and never join a vertex to itself.
class DualGraph {
 public:
  using EdgeMap = std::map<std::pair<std::size_t, std::size_t>, std::int64_t>;

  /// Throws InputError on a duplicate id.
  void add_curve(const std::string& id, std::int64_t self_intersection);
  /// Throws InputError on unknown ids, self-loops, repeated pairs or a
  /// multiplicity below 1.
  void add_meeting(const std::string& a, const std::string& b, std::int64_t multiplicity = 1);

  const std::vector<Curve>& curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }
  bool empty() const { return curves_.empty(); }
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  /// Throws InputError for an unknown id.
  std::size_t index_of(const std::string& id) const;

  /// E_i . E_j by vertex index; the diagonal is the self-intersection.
  std::int64_t intersection(std::size_t i, std::size_t j) const;
  std::int64_t intersection(const std::string& a, const std::string& b) const;

  /// Keys are (i, j) with i < j.
  const EdgeMap& edges() const { return edges_; }
  std::vector<std::size_t> neighbours(std::size_t i) const;

  /// Connected components, ordered by their first vertex.
  std::vector<DualGraph> components() const;
  bool is_connected() const;
  /// Induced subgraph on `ids`, keeping this graph's vertex order.
  DualGraph subgraph(const std::vector<std::string>& ids) const;

  /// No (-1)-curves, i.e. K.E_i >= 0 for every vertex.
  bool is_minimal() const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  std::vector<Curve> curves_;
  std::map<std::string, std::size_t> index_;
  EdgeMap edges_;
};

/// Square symmetric integer matrix.
class IntersectionMatrix {
 public:
  /// Throws InputError when not square or not symmetric.
  explicit IntersectionMatrix(std::vector<std::vector<Integer>> entries);
  static IntersectionMatrix of(const DualGraph& g);

  std::size_t size() const { return entries_.size(); }
  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Integer>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<Integer>> entries_;
};

/// Exact determinant (fraction-free Bareiss elimination with row swaps).
Integer determinant(const std::vector<std::vector<Integer>>& m);

/// d_1, ..., d_n, d_k being the determinant of the top-left k x k block.
std::vector<Integer> leading_principal_minors(const IntersectionMatrix& m);

/// Pivots of symmetric Gaussian elimination without row exchanges. Stops
/// after the first zero pivot, so the result may be shorter than n.
std::vector<Rational> elimination_pivots(const IntersectionMatrix& m);

struct DefinitenessReport {
  bool negative_definite = false;
  std::vector<Integer> minors;
  /// 1-based k of the first minor with the wrong sign.
  std::optional<std::size_t> failing_minor;
};

/// Negative definite iff sign(d_k) = (-1)^k for all k.
DefinitenessReport definiteness(const IntersectionMatrix& m);
bool is_negative_definite(const IntersectionMatrix& m);

/// K.E = -2 - E^2 (adjunction for a smooth rational curve).
std::int64_t canonical_intersection(const DualGraph& g, const std::string& id);

/// Effective integral cycle with at least one positive multiplicity.
class Cycle {
 public:
  /// Throws InputError on negative entries or an all-zero cycle.
  explicit Cycle(std::map<std::string, std::int64_t> multiplicities);

  std::int64_t multiplicity(const std::string& id) const;
  const std::map<std::string, std::int64_t>& multiplicities() const { return mult_; }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::map<std::string, std::int64_t> mult_;
};

/// Z . E_j for a cycle supported on g.
Integer cycle_dot_curve(const DualGraph& g, const Cycle& z, std::size_t j);
Integer cycle_square(const DualGraph& g, const Cycle& z);

/// p_a(Z) = 1 + (Z^2 + Z.K)/2. Throws InputError if z leaves g.
Rational arithmetic_genus(const DualGraph& g, const Cycle& z);

/// Laufer's algorithm. Throws InputError for disconnected or
/// non-negative-definite input.
Cycle fundamental_cycle(const DualGraph& g);

/// Every component negative definite with fundamental cycle of genus 0.
bool is_contractible_to_rational_point(const DualGraph& g);

/// Dynkin type of a connected configuration of (-2)-curves; nullopt when
/// the graph is not an ADE diagram.
std::optional<AdeType> classify_ade(const DualGraph& g);

/// Line format: `curve <id> <E^2>` and `meet <id> <id> [<mult>]`, with
/// '#' comments. Throws ParseError carrying the line number.
DualGraph parse_dual_graph(std::istream& in);
DualGraph parse_dual_graph(const std::string& text);
DualGraph load_dual_graph(const std::string& path);

/// Canonical text form accepted by parse_dual_graph.
std::string format_dual_graph(const DualGraph& g);

}  // namespace surfsing
