#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smashcoh/ext/modules.hpp"

namespace smashcoh {

/// Generator-level view of a complex of free R-bimodules with a diagonal: boundaries and
/// diagonal images of generators, with -1 never used for factors (the unit index stands in).
struct FreeDgData {
  FinDimAlgebra algebra;
  std::vector<std::int64_t> base_dims;
  std::function<std::vector<BimoduleTerm>(int n, std::int64_t v)> boundary;
  /// Empty function when there is no diagonal.
  std::function<std::vector<DiagonalTerm>(int n, std::int64_t v)> diagonal;
  int length() const { return static_cast<int>(base_dims.size()) - 1; }
};

FreeDgData free_dg_data(const FreeBimoduleResolution& k);
/// K # L^ over R = A # Gamma; diag may be null.
FreeDgData free_dg_data(const SmashComplex& x, const SmashDiagonal* diag);

/// Left-module actions of the underlying algebra on M and N.
struct ModulePair {
  int dim_m = 0, dim_n = 0;
  std::vector<Matrix> rho_m, rho_n;
};
/// M and N restricted along A -> A # Gamma (or unrestricted when over_smash is set).
ModulePair module_pair(const SmashModule& m, const SmashModule& n, bool over_smash);

/// Gamma-data for the diagonal action on K (x)_A M: base actions on Kbar and Gamma acting on M, N.
struct YonedaGamma {
  HopfAlgebra hopf;
  std::vector<std::vector<SparseMatrix>> base_action;
  std::vector<Matrix> rho_m, rho_n;
};
YonedaGamma yoneda_gamma(const FreeBimoduleResolution& k, const SmashModule& m, const SmashModule& n);

/// Hom_R(P (x)_R M, N) = Hom_k(Pbar_q (x) M, N), index (v * dim M + x) * dim N + y, with
///   (dF)(v (x) x) = -(-1)^q sum c r F(v' (x) r' x) over d v = sum c r v' r',
///   (fg)(v (x) x) = sum (-1)^{|f||g|} l f(v1 (x) mid g(v2 (x) r x)) over omega(v)   (M = N only),
///   (F . gamma)(v (x) x) = S(gamma_1) F(gamma_2 v (x) gamma_3 x).
class YonedaAlgebra : public InnerAlgebra {
 public:
  YonedaAlgebra(FreeDgData p, ModulePair mods, int top, std::optional<YonedaGamma> gamma = std::nullopt);

  const ModuleComplex& complex() const override { return complex_; }
  Vec product(int n1, const Vec& x, int n2, const Vec& y) const override;
  const HopfAlgebra& hopf() const override;
  const SparseMatrix& right_action(int q, int g) const override;
  const FreeDgData& data() const { return p_; }
  const ModulePair& modules() const { return mods_; }

 private:
  FreeDgData p_;
  ModulePair mods_;
  int top_;
  std::optional<YonedaGamma> gamma_;
  ModuleComplex complex_;
  std::vector<std::vector<SparseMatrix>> action_;
};

/// Hom_{A^e}(K, Hom_k(M, N)) on generators, index m * dim M dim N + (y * dim M + x), with the
/// bimodule-coefficient differential and the right action (f . gamma)(m) = S(gamma_1) f(gamma_2 m) gamma_3.
ModuleComplex hom_ae_bimodule_complex(const FreeBimoduleResolution& k, const SmashModule& m, const SmashModule& n,
                                      int top);

/// The adjunction Hom_{A^e}(K, Hom_k(M, N)) -> Hom_A(K (x)_A M, N), f -> (m (x) x -> f(m)(x)).
struct AdjunctionIso {
  std::vector<SparseMatrix> forward, backward;
  /// Chain map, inverse, and right Gamma-actions intertwined.
  std::vector<std::string> check(const ModuleComplex& left, const ModuleComplex& right) const;
};
AdjunctionIso adjunction_iso(const FreeBimoduleResolution& k, int dim_m, int dim_n, int top);
/// The same coordinate permutation for any family of generator counts.
AdjunctionIso adjunction_iso(const std::vector<std::int64_t>& base_dims, const Field& f, int dim_m, int dim_n);

/// The augmentation K (x)_A M -> M is Gamma-linear for the diagonal action (degree 0).
std::vector<std::string> check_augmentation_equivariance(const FreeBimoduleResolution& k, const SmashModule& m);

}  // namespace smashcoh
