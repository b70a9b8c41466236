#pragma once

#include <string>
#include <vector>

#include "smashcoh/complexes/module_complex.hpp"
#include "smashcoh/hopf/hopf_algebra.hpp"
#include "smashcoh/linalg/layout.hpp"
#include "smashcoh/resolutions/lifting.hpp"

namespace smashcoh {

/// b (x) e_g in a free right Gamma-module.
struct RightTerm {
  std::int64_t base;
  int g;
  Scalar coef;
};

/// Complex of free right Gamma-modules L_p = Lbar_p (x) Gamma, full index b * dim + g.
struct FreeRightComplex {
  HopfAlgebra hopf;
  std::vector<std::int64_t> base_dims;
  /// boundary[p][b] = d(b (x) 1), p >= 1.
  std::vector<std::vector<std::vector<RightTerm>>> boundary;

  int length() const { return static_cast<int>(base_dims.size()) - 1; }
  int gdim() const { return hopf.dim(); }
  std::int64_t base_dim(int p) const;
  std::int64_t full_dim(int p) const { return base_dim(p) * gdim(); }
  SparseVec differential_full(int p, std::int64_t x) const;
  /// v . e_g
  SparseVec right_act(const SparseVec& v, int g) const;
  FreeSource free_source() const;
};

/// Bar resolution of the trivial right module: L_p = Gamma^{(x)p} (x) Gamma with
/// d(g1..gp (x) g) = eps(g1) g2..gp (x) g + sum (-1)^i ..g_i g_{i+1}.. (x) g + (-1)^p g1..g_{p-1} (x) g_p g.
FreeRightComplex trivial_module_resolution(const HopfAlgebra& h, int length);

/// Full chain complex with family right:Gamma; augmented adds k in degree -1 via eps.
ModuleComplex right_complex(const FreeRightComplex& l, bool augmented);

/// (L (x) L)_n with slot i = L_i (x) L_{n-i} (radices B_i, dim, B_{n-i}, dim), the Koszul
/// differential and the diagonal right action.
class TensorSquare {
 public:
  TensorSquare(const FreeRightComplex& l, int top);
  const FreeRightComplex& source() const { return *l_; }
  int top() const { return top_; }
  const SlotLayout& layout(int n) const { return layouts_[static_cast<std::size_t>(n)]; }
  std::int64_t dim(int n) const { return layout(n).size(); }
  SparseVec differential_full(int n, std::int64_t x) const;
  SparseMatrix differential(int n) const;
  SparseVec right_act(int n, const SparseVec& v, int g) const;
  /// xi (x) xi on degree 0.
  Scalar augmentation(const SparseVec& v) const;
  LiftTarget lift_target() const;

 private:
  const FreeRightComplex* l_;
  int top_;
  std::vector<SlotLayout> layouts_;
};

/// sigma on generators: map[p][b] = sigma(b (x) 1) in (L (x) L)_p.
struct LDiagonal {
  std::string kind;
  FreeMap map;
};

/// Closed-form Alexander-Whitney diagonal; requires a group algebra.
LDiagonal sigma_alexander_whitney(const TensorSquare& t);
/// Diagonal from the lifting solver; works for any Gamma.
LDiagonal sigma_lifted(const TensorSquare& t);
/// sigma extended right-linearly to a full element of L_p.
SparseVec sigma_full(const TensorSquare& t, const LDiagonal& s, int p, const SparseVec& v);
/// Chain-map identity, xi-compatibility on degree 0.
std::vector<std::string> check_sigma(const TensorSquare& t, const LDiagonal& s);

/// Induced modules M^ = M (x)_Gamma Gamma^e for free M = k^r (x) Gamma, in the normal
/// form Gamma (x) k^r (x) Gamma, index (gamma * r + b) * dim + gamma'.
namespace induced {
/// (b (x) e_h) (x)_Gamma 1 = sum S(h_1) (x) b (x) h_2.
SparseVec iota(const HopfAlgebra& h, std::int64_t r, std::int64_t b, int g);
SparseVec left(const HopfAlgebra& h, std::int64_t r, const SparseVec& v, int g);
SparseVec right(const HopfAlgebra& h, std::int64_t r, const SparseVec& v, int g);
/// rho(gamma, b, gamma') = sum gamma_1 gamma'_1 (x) (gamma_2, b, gamma'_2) in Gamma (x) M^, index h * dim(M^) + y.
SparseVec coaction(const HopfAlgebra& h, std::int64_t r, std::int64_t x);
/// f^ for f(b (x) 1) = images[b] in the free module of rank s.
SparseMatrix induce_map(const HopfAlgebra& h, std::int64_t r, std::int64_t s,
                        const std::vector<std::vector<RightTerm>>& images);
}  // namespace induced

/// L^ = L (x)_Gamma Gamma^e as a complex of Hopf bimodules.
class InducedComplex {
 public:
  explicit InducedComplex(const FreeRightComplex& l);
  const FreeRightComplex& source() const { return *l_; }
  const HopfAlgebra& hopf() const { return l_->hopf; }
  int length() const { return l_->length(); }
  std::int64_t dim(int p) const;
  std::int64_t index(int p, int g, std::int64_t b, int g2) const;
  void decode(int p, std::int64_t x, int& g, std::int64_t& b, int& g2) const;
  SparseVec differential_full(int p, std::int64_t x) const;
  SparseMatrix differential(int p) const { return diffs_[static_cast<std::size_t>(p)]; }
  /// L_p -> L^_p, l -> l (x)_Gamma 1.
  SparseVec embed(int p, const SparseVec& v) const;
  SparseVec coaction(int p, std::int64_t x) const;
  /// xi^(gamma, b, gamma') = xi(b) gamma gamma' on degree 0.
  SparseVec xi_up(std::int64_t x) const;
  /// Full complex with families left:Gamma, right:Gamma; augmented adds Gamma in degree -1 via xi^.
  ModuleComplex to_complex(bool augmented) const;

 private:
  const FreeRightComplex* l_;
  std::vector<SparseMatrix> diffs_;
};

/// L^ (x)_Gamma L^ in normal form: slot i of degree n has radices (dim, B_i, dim, B_{n-i}, dim).
class InducedSquare {
 public:
  InducedSquare(const InducedComplex& up, int top);
  const SlotLayout& layout(int n) const { return layouts_[static_cast<std::size_t>(n)]; }
  std::int64_t dim(int n) const { return layout(n).size(); }
  SparseVec differential_full(int n, std::int64_t x) const;
  SparseVec left(int n, const SparseVec& v, int g) const;
  SparseVec right(int n, const SparseVec& v, int g) const;
  /// rho(l (x) l') = l_{-1} l'_{-1} (x) (l_0 (x) l'_0), index h * dim(n) + y.
  SparseVec coaction(int n, std::int64_t x) const;
  /// xi^ (x) xi^ followed by multiplication, on degree 0.
  SparseVec augmentation(std::int64_t x) const;
  /// (iota (x) iota) on (L (x) L)_n.
  SparseVec embed_pair(const TensorSquare& t, int n, const SparseVec& v) const;
  /// sigma^(gamma, b, gamma') = gamma sigma_1(b) (x) sigma_2(b) gamma'.
  SparseVec sigma_up(const TensorSquare& t, const LDiagonal& s, int p, std::int64_t x) const;

 private:
  const InducedComplex* up_;
  std::vector<SlotLayout> layouts_;
};

/// Chain map, bimodule linearity, colinearity, xi-compatibility and restriction to L.
std::vector<std::string> check_sigma_up(const InducedComplex& up, const InducedSquare& sq, const TensorSquare& t,
                                        const LDiagonal& s, int top);

}  // namespace smashcoh
