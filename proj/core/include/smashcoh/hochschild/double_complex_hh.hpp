#pragma once

#include <string>
#include <vector>

#include "smashcoh/complexes/double_complex.hpp"
#include "smashcoh/hochschild/cochains.hpp"

namespace smashcoh {

/// Hom_Gamma(L, W) for a free right Gamma-complex L and a right Gamma-module dg algebra W.
/// C^{p,q} = Hom_k(Lbar_p, W^q), index b * dim W^q + w, with
///   dh chi = -(-1)^{p+q} chi o d_L   (chi(b (x) g) = chi(b) . g),
///   dv chi = (-1)^p d_W o chi,
/// so the total differential is d_W chi - (-1)^n chi d_L. The product is
///   (f * g)(b) = sum (-1)^{|g| p_1} (f(b_1) . g_1)(g(b_2) . g_2) over sigma(b).
class GammaHomDoubleComplex : public DgAlgebra {
 public:
  GammaHomDoubleComplex(const FreeRightComplex& l, const TensorSquare& t, const LDiagonal& s, const InnerAlgebra& w,
                        int top);

  const ModuleComplex& complex() const override { return total_.complex(); }
  Vec product(int n1, const Vec& x, int n2, const Vec& y) const override;

  const TotalComplex& total() const { return total_; }
  const InnerAlgebra& inner() const { return *w_; }
  const FreeRightComplex& L() const { return *l_; }
  int top() const { return top_; }
  std::int64_t inner_dim(int q) const { return w_->complex().dim(q); }
  /// Index in Tot^{p+q} of the cochain sending b to the w-th basis vector of W^q.
  std::int64_t index(int p, int q, std::int64_t b, std::int64_t w) const;

 private:
  const FreeRightComplex* l_;
  const TensorSquare* t_;
  const LDiagonal* s_;
  const InnerAlgebra* w_;
  int top_;
  TotalComplex total_;
};

/// Generator values of a total cochain given on the full spaces
/// Hom_k(Lbar_p (x) Gamma, Hom_k(A (x) Kbar_q (x) A, B)), blocks ordered by p and indexed
/// ((b * dim Gamma + g) * dim K_q + x) * dim B + e. Throws NotLinear.
Vec double_cochain_from_full(const GammaHomDoubleComplex& dc, const HomAeAlgebra& w, int n, const Vec& full);

/// Xi: theta -> (l -> (x -> (-1)^{|x||l|} theta(l_{-1} x (x) l_0))) and its inverse Phi, as
/// matrices between SmashCochains and the double complex built on HomAeAlgebra.
class XiIsomorphism {
 public:
  XiIsomorphism(const SmashCochains& c, const GammaHomDoubleComplex& dc);
  const SparseMatrix& xi(int n) const { return xi_[static_cast<std::size_t>(n)]; }
  const SparseMatrix& phi(int n) const { return phi_[static_cast<std::size_t>(n)]; }
  Vec xi_map(int n, const Vec& theta) const { return xi(n).apply(theta); }
  Vec phi_inverse(int n, const Vec& chi) const { return phi(n).apply(chi); }
  /// Variants on full-basis inputs, checking the declared linearity first.
  Vec xi_full(int n, const Vec& theta_full) const;
  Vec phi_inverse_full(int n, const HomAeAlgebra& w, const Vec& chi_full) const;

  /// Xi Phi = id, Phi Xi = id, D Xi = Xi D through degree top - 1.
  std::vector<std::string> check_isomorphism() const;
  /// Xi(theta theta') = Xi(theta) * Xi(theta') on basis cochains with |theta| + |theta'| <= max_total.
  std::vector<std::string> check_multiplicative(int max_total, std::size_t max_failures = 5) const;

 private:
  const SmashCochains* c_;
  const GammaHomDoubleComplex* dc_;
  std::vector<SparseMatrix> xi_, phi_;
};

}  // namespace smashcoh
