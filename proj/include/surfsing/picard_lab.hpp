#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "surfsing/dual_graph.hpp"
#include "surfsing/rational.hpp"

namespace surfsing {

/// Pic of P^2 blown up k times: basis H, e_1..e_k with form diag(1, -1, ..., -1).
class PicardLattice {
 public:
  explicit PicardLattice(std::size_t blowups = 0) : blowups_(blowups) {}

  std::size_t blowups() const { return blowups_; }
  std::size_t rank() const { return blowups_ + 1; }

  /// Throws InputError when either vector has the wrong length.
  Integer dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;

  /// K_Y = -3H + sum e_i.
  std::vector<std::int64_t> canonical_class() const;

 private:
  std::size_t blowups_;
};

/// Class of a named curve in the lattice basis [H, e_1, ..., e_k].
struct CurveClass {
  std::string name;
  std::vector<std::int64_t> coefficients;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct CurveDeclaration {
  std::string name;
  std::int64_t degree = 1;
};

struct PointIncidence {
  std::string curve;
  std::int64_t multiplicity = 1;
};

/// Blow up one point. Infinitely near points are expressed by listing an
/// earlier exceptional curve among the curves through the point.
struct BlowupStep {
  std::string exceptional;
  std::vector<PointIncidence> through;
};

struct BlowupProgram {
  std::vector<CurveDeclaration> declarations;
  std::vector<BlowupStep> steps;
  std::vector<std::string> contract;
};

struct LabResult {
  PicardLattice lattice;
  std::vector<CurveClass> classes;  // declarations first, then exceptional curves in step order

  /// Throws InputError for an unknown name.
  const CurveClass& find(const std::string& name) const;
};

/// Runs the program: each step replaces C by C - m e_new for every listed
/// curve and introduces e_new. Throws InputError on unknown or repeated
/// names and non-positive multiplicities or degrees.
LabResult execute(const BlowupProgram& program);

Integer intersect(const PicardLattice& lattice, const CurveClass& a, const CurveClass& b);

/// Symmetric matrix of C_i.C_j. Throws InputError on rank mismatch.
std::vector<std::vector<Integer>> pairwise_intersections(const PicardLattice& lattice,
                                                         const std::vector<CurveClass>& classes);

/// p_a(C) = 1 + (C^2 + C.K)/2.
Integer class_arithmetic_genus(const PicardLattice& lattice, const CurveClass& c);

/// Dual graph of the named curves; vertex order follows `contract`.
/// Throws InputError if two distinct listed curves meet negatively.
DualGraph extract_dual_graph(const LabResult& lab, const std::vector<std::string>& contract);

struct AmbientInvariants {
  std::int64_t ky_squared = 9;
  std::int64_t picard_rank = 1;
  std::int64_t chi_oy = 1;
};

AmbientInvariants ambient_invariants(const PicardLattice& lattice);

/// Line format with '#' comments:
///   declare <name> degree <d>
///   blowup <exc> through <name>[:<mult>] [, <name>[:<mult>] ...]
///   contract <name> [, <name> ...]
BlowupProgram parse_blowup_program(std::istream& in);
BlowupProgram parse_blowup_program(const std::string& text);
BlowupProgram load_blowup_program(const std::string& path);
std::string format_blowup_program(const BlowupProgram& program);

/// Log del Pezzo surface of Picard number one with no anticanonical
/// sections: conic B, tangent line D, secant line A, thirteen blow-ups.
BlowupProgram builtin_counterexample_program();

}  // namespace surfsing
