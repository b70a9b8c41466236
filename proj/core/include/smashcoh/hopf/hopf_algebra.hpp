#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashcoh/hopf/algebra.hpp"
#include "smashcoh/hopf/group.hpp"

namespace smashcoh {

/// Finite-dimensional Hopf algebra with bijective antipode. Construction never
/// throws on bad Hopf data; validate_hopf reports the violated axioms.
class HopfAlgebra {
 public:
  static constexpr int kMaxCoproductArity = 6;

  HopfAlgebra() = default;
  /// coproduct[g] lives on the dim^2 tensor basis (index i*dim+j). When S^{-1}
  /// is not supplied it is computed by inverting S (left zero if S is singular).
  HopfAlgebra(FinDimAlgebra algebra, std::vector<SparseVec> coproduct, Vec counit, Matrix antipode,
              std::optional<Matrix> antipode_inverse = std::nullopt);

  const FinDimAlgebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  int dim() const { return alg_.dim(); }

  const SparseVec& coproduct(int g) const { return coproduct_[static_cast<std::size_t>(g)]; }
  const Vec& counit() const { return counit_; }
  const Matrix& antipode() const { return s_; }
  const Matrix& antipode_inverse() const { return sinv_; }
  /// S(e_g), S^{-1}(e_g) as sparse vectors.
  const SparseVec& S(int g) const { return s_cols_[static_cast<std::size_t>(g)]; }
  const SparseVec& Sinv(int g) const { return sinv_cols_[static_cast<std::size_t>(g)]; }
  /// n-fold coproduct of e_g on the dim^n basis (first factor slowest), 1 <= n <= kMaxCoproductArity.
  const SparseVec& delta(int n, int g) const;
  /// Splits a flat dim^n index into its n factor indices.
  std::vector<int> split(std::int64_t idx, int n) const;

  Matrix coproduct_matrix() const;
  Matrix counit_matrix() const;

  /// Set when constructed from a group: basis elements are grouplike.
  const std::optional<FiniteGroup>& group() const { return group_; }
  void set_group(FiniteGroup g) { group_ = std::move(g); }
  std::string name;

 private:
  FinDimAlgebra alg_;
  std::vector<SparseVec> coproduct_;
  Vec counit_;
  Matrix s_, sinv_;
  std::vector<SparseVec> s_cols_, sinv_cols_;
  std::vector<std::vector<SparseVec>> deltas_;
  std::optional<FiniteGroup> group_;
};

/// kG with Delta(g) = g(x)g, eps(g) = 1, S(g) = g^{-1}.
HopfAlgebra group_algebra(const FiniteGroup& g, const Field& f);
/// Sweedler's H4: basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x(x)1 + g(x)x, S(x) = -gx.
HopfAlgebra sweedler_h4(const Field& f);
/// k itself.
HopfAlgebra trivial_hopf(const Field& f);

/// Every violated Hopf axiom, as readable strings; empty when valid.
std::vector<std::string> validate_hopf(const HopfAlgebra& h);

/// Smallest k in [1, max_order] with S^k = id, or 0 if none.
int antipode_order(const HopfAlgebra& h, int max_order = 64);

/// Gamma -> Gamma^e = Gamma^op (x) Gamma, gamma -> S(gamma_1) (x) gamma_2.
Matrix twisted_diagonal(const HopfAlgebra& h);
/// Gamma -> Gamma^{(x)n}, with n = 1 the identity.
Matrix iterated_coproduct(const HopfAlgebra& h, int n);

}  // namespace smashcoh
