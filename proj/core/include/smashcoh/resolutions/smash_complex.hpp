#pragma once

#include <map>
#include <vector>

#include "smashcoh/resolutions/bimodule_resolution.hpp"
#include "smashcoh/resolutions/right_resolution.hpp"

namespace smashcoh {

/// K # L^ over R = A # Gamma, truncated at total degree top.
///   base V_n:  slot q = Kbar_q (x) Lbar_{n-q}
///   full X_n:  slot q = (A (x) Kbar_q (x) A) (x) (Gamma (x) Lbar_{n-q} (x) Gamma)
///   free F_n:  R (x) V_n (x) R, index (r * |V_n| + v) * dim R + r'
class SmashComplex {
 public:
  SmashComplex(const FreeBimoduleResolution& k, const FreeRightComplex& l, int top);

  const FreeBimoduleResolution& K() const { return *k_; }
  const FreeRightComplex& L() const { return *l_; }
  const InducedComplex& Lup() const { return up_; }
  const HopfAlgebra& hopf() const { return l_->hopf; }
  const FinDimAlgebra& smash() const { return r_; }
  int rdim() const { return r_.dim(); }
  int top() const { return top_; }

  const SlotLayout& base_layout(int n) const { return base_[static_cast<std::size_t>(n)]; }
  std::int64_t base_dim(int n) const { return base_layout(n).size(); }
  const SlotLayout& full_layout(int n) const { return full_[static_cast<std::size_t>(n)]; }
  std::int64_t full_dim(int n) const { return full_layout(n).size(); }
  std::int64_t free_dim(int n) const { return base_dim(n) * rdim() * rdim(); }
  std::int64_t free_index(int n, int r, std::int64_t v, int r2) const;
  void free_decode(int n, std::int64_t f, int& r, std::int64_t& v, int& r2) const;
  /// Index of the smash basis element a # g.
  int rindex(int a, int g) const { return a * hopf().dim() + g; }
  /// x_v = (1 (x) m (x) 1) (x) (1 (x) b (x) 1) in full coordinates.
  std::int64_t generator_full(int n, std::int64_t v) const;

  SparseVec differential_full(int n, std::int64_t x) const;
  /// tau (x) xi^ on X_0, into R.
  SparseVec augmentation_full(std::int64_t x) const;
  SparseVec left_A(int n, const SparseVec& x, int a) const;
  SparseVec left_gamma(int n, const SparseVec& x, int g) const;
  SparseVec right_A(int n, const SparseVec& x, int a) const;
  SparseVec right_gamma(int n, const SparseVec& x, int g) const;
  SparseVec left_R(int n, const SparseVec& x, int r) const;
  SparseVec right_R(int n, const SparseVec& x, int r) const;

  /// a g (x) (m (x) b) (x) a' g' -> (a, g_1 m, g_2 a') (x) (g_3, b, g').
  SparseVec psi(int n, const SparseVec& f) const;
  /// (a, m, a') (x) (g, b, g') -> a g_3 (x) (S^{-1}(g_2) m (x) b) (x) (S^{-1}(g_1) a') g'.
  /// Agrees with a g_2 (x) (S^{-1}(g_1) m (x) b) (x) (S(g_3) a') g' when Gamma is cocommutative.
  SparseVec psi_inverse(int n, const SparseVec& x) const;
  /// psi^{-1}(d x_v) in F_{n-1}, cached.
  const SparseVec& boundary(int n, std::int64_t v) const { return boundary_[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)]; }
  /// (tau (x) xi^)(x_v) for v in V_0.
  SparseVec generator_augmentation(std::int64_t v) const;
  /// r F r' with F in free coordinates.
  SparseVec free_act(int n, const SparseVec& f, int r, int r2) const;
  FreeSource free_source() const;

  /// Full complex with families left:A, left:Gamma, right:A, right:Gamma, left:R, right:R.
  ModuleComplex to_complex(bool augmented) const;

 private:
  const FreeBimoduleResolution* k_;
  const FreeRightComplex* l_;
  InducedComplex up_;
  FinDimAlgebra r_;
  int top_;
  std::vector<SlotLayout> base_, full_;
  std::vector<std::vector<SparseVec>> boundary_;
};

/// (K # L^) (x)_R (K # L^): slot n1 of degree n is R (x) V_{n1} (x) R (x) V_{n-n1} (x) R.
class SmashSquare {
 public:
  SmashSquare(const SmashComplex& x, int top);
  const SmashComplex& source() const { return *x_; }
  const SlotLayout& layout(int n) const { return layouts_[static_cast<std::size_t>(n)]; }
  std::int64_t dim(int n) const { return layout(n).size(); }
  SparseVec differential_full(int n, std::int64_t w) const;
  SparseVec act(int n, const SparseVec& w, int r, int r2) const;
  /// Multiplication after (tau (x) xi^) on both factors, degree 0.
  SparseVec augmentation_full(std::int64_t w) const;
  /// f1 (x)_R f2 for free-coordinate vectors of degrees n1 and n2.
  SparseVec merge(int n1, const SparseVec& f1, int n2, const SparseVec& f2) const;

 private:
  const SmashComplex* x_;
  std::vector<SlotLayout> layouts_;
};

/// (K (x)_A K) # (L^ (x)_Gamma L^) with the twist phi into SmashSquare. Slots are keyed by
/// (K degree k, K split i, L split j) with radices
/// (a, Kbar_i, a, Kbar_{k-i}, a, d, Lbar_j, d, Lbar_{n-k-j}, d).
class TwistSource {
 public:
  TwistSource(const SmashComplex& x, const SmashSquare& sq, int top);
  const SlotLayout& layout(int n) const { return layouts_[static_cast<std::size_t>(n)]; }
  std::int64_t dim(int n) const { return layout(n).size(); }
  int slot(int n, int k, int i, int j) const;
  struct Key {
    int k, i, j;
  };
  Key key(int n, int slot) const { return keys_[static_cast<std::size_t>(n)][static_cast<std::size_t>(slot)]; }
  /// (x (x)_A y) (x) (l (x)_Gamma l') -> (-1)^{|l||y|} (x (x) l_0) (x)_R (S^{-1}(l_{-1}) y (x) l').
  SparseVec phi(int n, const SparseVec& z) const;
  /// (x (x) l) (x)_R (y (x) l') -> (-1)^{|l||y|} (x (x)_A l_{-1} y) (x) (l_0 (x)_Gamma l').
  SparseVec phi_inverse(int n, const SparseVec& w) const;
  /// Diagonal left Gamma-action.
  SparseVec left_gamma(int n, const SparseVec& z, int g) const;

 private:
  const SmashComplex* x_;
  const SmashSquare* sq_;
  std::vector<SlotLayout> layouts_;
  std::vector<std::map<std::tuple<int, int, int>, int>> slots_;
  std::vector<std::vector<Key>> keys_;
};

/// phi o (omega (x) sigma^) on generators.
class SmashDiagonal {
 public:
  SmashDiagonal(const SmashComplex& x, const TensorSquare& t, const LDiagonal& s, int top);
  const SmashSquare& square() const { return sq_; }
  const TwistSource& twist() const { return tw_; }
  int top() const { return top_; }
  /// Image of x_v in SmashSquare degree n.
  const SparseVec& image(int n, std::int64_t v) const { return images_[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)]; }
  /// Image of a free-coordinate vector (extended R^e-linearly).
  SparseVec apply(int n, const SparseVec& f) const;
  /// Chain-map identity on generators and degree-0 augmentation compatibility.
  std::vector<std::string> check() const;

 private:
  const SmashComplex* x_;
  int top_;
  SmashSquare sq_;
  TwistSource tw_;
  std::vector<std::vector<SparseVec>> images_;
};

}  // namespace smashcoh
