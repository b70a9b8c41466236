#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smashcoh/linalg/elimination.hpp"

namespace smashcoh {

class StructureMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named family of degree-0 operators (one per algebra basis element), e.g.
/// "left:A", "right:A", "gamma". ops[n - lo][k] acts on degree n.
struct ActionFamily {
  std::string name;
  std::vector<std::vector<SparseMatrix>> ops;
};

/// Complex of finite-dimensional spaces in degrees lo..hi. The differential
/// goes from degree n to n + step (step = -1 for chain, +1 for cochain complexes).
class ModuleComplex {
 public:
  ModuleComplex() = default;
  ModuleComplex(Field f, int lo, std::vector<std::int64_t> dims, int step);

  const Field& field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  int step() const { return step_; }
  bool in_range(int n) const { return n >= lo() && n <= hi(); }
  int dim(int n) const;

  /// d(n): degree n -> degree n + step; a map into the zero space outside the range.
  const SparseMatrix& d(int n) const;
  void set_differential(int n, SparseMatrix m);

  void add_family(ActionFamily fam);
  bool has_family(const std::string& name) const;
  const ActionFamily& family(const std::string& name) const;
  const std::vector<ActionFamily>& families() const { return families_; }

  /// Homology is only trusted in lo..trusted_hi (truncated resolutions).
  int trusted_hi = 0;

  /// d o d = 0 and every family commutes with d.
  std::vector<std::string> validate() const;

 private:
  Field field_;
  int lo_ = 0, step_ = 1;
  std::vector<std::int64_t> dims_;
  std::vector<SparseMatrix> d_;
  std::vector<ActionFamily> families_;
};

struct Homology {
  int degree = 0;
  Subspace cycles, boundaries;
  /// Deterministic cycle representatives of a basis of the homology.
  std::vector<Vec> representatives;
  /// Sends a cycle to its class coordinates; kills boundaries.
  Matrix projection;
  int dim() const { return static_cast<int>(representatives.size()); }
  Vec classify(const Vec& cycle) const { return projection.apply(cycle); }
  bool is_cycle(const Vec& v) const { return cycles.contains(v); }
};

Homology homology(const ModuleComplex& x, int n);
std::vector<int> homology_dims(const ModuleComplex& x);

/// Degree-n maps X -> Y commuting with the named families, flattened row-major
/// block by block (blocks ordered by source degree).
struct HomComplex {
  ModuleComplex complex;
  /// basis[n - lo] has the flattened maps as columns.
  std::vector<Matrix> basis;
  Vec flatten_coords(int n, const Vec& coords) const;
};

/// Hom complex with differential f -> d_Y f - (-1)^{|f|} f d_X. Intended for
/// small cross-checks; production code uses free normal forms instead.
HomComplex hom_complex(const ModuleComplex& x, const ModuleComplex& y, const std::vector<std::string>& over);

/// X (x)_A Y as the quotient of X (x) Y by x.a (x) y - x (x) a.y, with Koszul
/// signed differential. Families named "left..." on X and "right..." on Y are kept.
struct TensorComplex {
  ModuleComplex complex;
  std::vector<QuotientData> quotients;
  /// Full k-tensor coordinates: offsets[n - lo][i] is the start of X_{x.lo+i} (x) Y_{n - x.lo - i}.
  std::vector<std::vector<std::int64_t>> offsets;
  std::vector<std::int64_t> full_dims;
};
TensorComplex tensor_over_algebra(const ModuleComplex& x, const std::string& right_family, const ModuleComplex& y,
                                  const std::string& left_family);

}  // namespace smashcoh
