#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashcoh/complexes/module_complex.hpp"
#include "smashcoh/hopf/action.hpp"
#include "smashcoh/linalg/layout.hpp"
#include "smashcoh/resolutions/lifting.hpp"

namespace smashcoh {

/// e_left (x) x_base (x) e_right with coefficient.
struct BimoduleTerm {
  int left;
  std::int64_t base;
  int right;
  Scalar coef;
};

/// (e_left (x) x_first (x) e_middle) (x)_A (1 (x) x_second (x) e_right); first has degree split.
struct DiagonalTerm {
  int left;
  int split;
  std::int64_t first;
  int middle;
  std::int64_t second;
  int right;
  Scalar coef;
};

/// Equivariant resolution K -> A, free over A^e on base spaces: K_q = A (x) Kbar_q (x) A,
/// full index (a * base_dim + m) * dim A + a'. Degrees 0..length.
struct FreeBimoduleResolution {
  std::string name;
  FinDimAlgebra algebra;
  std::optional<ModuleAlgebraAction> action;
  std::vector<std::int64_t> base_dims;
  /// boundary[q][m] = d(1 (x) m (x) 1), q >= 1.
  std::vector<std::vector<std::vector<BimoduleTerm>>> boundary;
  /// tau(1 (x) m (x) 1) for degree-0 generators.
  std::vector<SparseVec> augmentation;
  /// gamma[q][g]: action of e_g on the base space (empty without an action).
  std::vector<std::vector<SparseMatrix>> gamma;
  /// Diagonal omega on generators, empty when not known in closed form.
  std::vector<std::vector<std::vector<DiagonalTerm>>> diagonal;
  /// act_cols[g][a] = e_g . e_a, cached from the action.
  std::vector<std::vector<SparseVec>> act_cols;

  int length() const { return static_cast<int>(base_dims.size()) - 1; }
  int adim() const { return algebra.dim(); }
  std::int64_t base_dim(int q) const;
  std::int64_t full_dim(int q) const;
  std::int64_t full_index(int q, int a, std::int64_t m, int a2) const;
  void full_decode(int q, std::int64_t x, int& a, std::int64_t& m, int& a2) const;

  /// d on a full basis element of degree q >= 1.
  SparseVec differential_full(int q, std::int64_t x) const;
  /// tau on a degree-0 full basis element, in A.
  SparseVec augmentation_full(std::int64_t x) const;
  /// e_g acting diagonally on a full basis element.
  SparseVec gamma_full(int q, int g, std::int64_t x) const;
  /// e_l * v * e_r on full coordinates (-1 for no factor).
  SparseVec act_full(int q, const SparseVec& v, int l, int r) const;
  /// Free source view for the lifting solver.
  FreeSource free_source() const;
  /// Full complex (without augmentation) as a lifting target.
  LiftTarget lift_target() const;
};

/// Bar resolution with the diagonal Gamma-action and the explicit diagonal. The
/// normalized variant drops the unit from the middle factors. Requires the unit
/// of A to be a basis vector.
FreeBimoduleResolution bar_resolution(const FinDimAlgebra& a, const std::optional<ModuleAlgebraAction>& act, int length,
                                      bool normalized = false);

/// Chain complex of full spaces (degrees 0..length, or -1..length with A in degree -1
/// when augmented) with families left:A, right:A and gamma (when acted on).
ModuleComplex bimodule_complex(const FreeBimoduleResolution& k, bool augmented);

/// K (x)_A K in normal form: slot i of degree n is A (x) Kbar_i (x) A (x) Kbar_{n-i} (x) A.
class DiagonalTarget {
 public:
  DiagonalTarget(const FreeBimoduleResolution& k, int top);
  const FreeBimoduleResolution& source() const { return *k_; }
  int top() const { return top_; }
  const SlotLayout& layout(int n) const { return layouts_[static_cast<std::size_t>(n)]; }
  std::int64_t dim(int n) const { return layout(n).size(); }

  SparseMatrix differential(int n) const;
  SparseVec differential_full(int n, std::int64_t x) const;
  SparseVec gamma_full(int n, int g, std::int64_t x) const;
  SparseVec act_full(int n, const SparseVec& v, int l, int r) const;
  /// (tau (x) tau) followed by multiplication, on degree 0.
  SparseVec augmentation_full(std::int64_t x) const;
  /// Image of a generator under the closed-form diagonal.
  SparseVec omega(int q, std::int64_t m) const;
  LiftTarget lift_target() const;

 private:
  const FreeBimoduleResolution* k_;
  int top_;
  std::vector<SlotLayout> layouts_;
};

/// Violations of: d omega = omega d, omega Gamma-linear, augmentation compatibility.
std::vector<std::string> check_condition_three(const DiagonalTarget& t);

/// Diagonal obtained from the lifting solver (A^e-linear, not necessarily Gamma-linear).
FreeMap lift_diagonal(const DiagonalTarget& t);

/// Q_0 = K_0 + P_0 and Q_q = K_q + A (x) ker d_{q-1} (x) A + P_q, with inclusions of K and P.
struct MediatingResolution {
  FreeBimoduleResolution q;
  /// Base-space offsets of the K block, kernel block and P block per degree.
  std::vector<std::int64_t> k_offset, z_offset, p_offset;
  SparseMatrix include_k(int deg) const;
  SparseMatrix include_p(int deg) const;
};
MediatingResolution mediating_resolution(const FreeBimoduleResolution& k, const FreeBimoduleResolution& p, int length);

}  // namespace smashcoh
