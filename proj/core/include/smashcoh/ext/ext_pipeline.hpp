#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smashcoh/ext/yoneda.hpp"
#include "smashcoh/hochschild/pipeline.hpp"

namespace smashcoh {

struct ExtOptions {
  int top = 4;
  std::string sigma = "auto";
  /// Also build Hom_R(K # L^ (x)_R M, M) and the composite isomorphism onto the double complex.
  bool left_side = true;
};

/// Ext_R(M, M) for R = A # Gamma from Hom_Gamma(L, Hom_A(K (x)_A M, M)), together with the
/// Hochschild model HH(R, End_k M) it is adjoint to.
class ExtPipeline {
 public:
  ExtPipeline(ModuleAlgebraAction act, SmashModule m, ExtOptions opts);
  ExtPipeline(const ExtPipeline&) = delete;
  ExtPipeline& operator=(const ExtPipeline&) = delete;

  const SmashModule& module() const { return m_; }
  const ExtOptions& options() const { return opts_; }
  /// Double complex and smash cochains with coefficients in End_k(M).
  const HHPipeline& hochschild() const { return *hh_; }
  const YonedaAlgebra& yoneda() const { return *yoneda_; }
  const GammaHomDoubleComplex& double_complex() const { return *dc_; }
  const AdjunctionIso& adjunction() const { return adj_; }
  /// Adjunction applied blockwise: Hom_Gamma(L, Hom_{A^e}(K, End M)) -> Hom_Gamma(L, Hom_A(K (x)_A M, M)).
  const std::vector<SparseMatrix>& total_adjunction() const { return total_adj_; }
  bool has_left_side() const { return left_ != nullptr; }
  const YonedaAlgebra& left() const { return *left_; }
  /// Hom_R(X (x)_R M, M) -> double complex, through HH(R, End M) and Xi.
  const std::vector<SparseMatrix>& composite() const { return composite_; }

  /// Adjunction is a Gamma-equivariant dg-algebra isomorphism, and the bimodule complex matches
  /// the End(M)-coefficient cochains.
  std::vector<std::string> check_adjunction(int max_total) const;
  /// Blockwise adjunction is a multiplicative chain isomorphism of the double complexes.
  std::vector<std::string> check_double_complex(int max_total) const;
  /// Composite isomorphism from the left side is a multiplicative chain isomorphism.
  std::vector<std::string> check_composite(int max_total) const;

  HHRing ring(int maxdeg) const { return hh_ring(*dc_, maxdeg); }

 private:
  ModuleAlgebraAction act_;
  SmashModule m_;
  ExtOptions opts_;
  std::unique_ptr<HHPipeline> hh_;
  std::unique_ptr<YonedaAlgebra> yoneda_;
  std::unique_ptr<GammaHomDoubleComplex> dc_;
  AdjunctionIso adj_;
  std::vector<SparseMatrix> total_adj_, total_adj_inv_;
  std::unique_ptr<YonedaAlgebra> left_;
  AdjunctionIso left_adj_;
  std::vector<SparseMatrix> composite_;
};

/// Dims of Ext_R(M, N) from the double complex (graded vector space only).
std::vector<int> ext_pair_dims(const ModuleAlgebraAction& act, const SmashModule& m, const SmashModule& n, int maxdeg);

/// Ext_R(M, M) from the normalized bar resolution of R = A # Gamma alone.
class ExtOracle {
 public:
  ExtOracle(const SmashModule& m, int maxdeg);
  ExtOracle(const ExtOracle&) = delete;
  ExtOracle& operator=(const ExtOracle&) = delete;
  const YonedaAlgebra& cochains() const { return *cochains_; }
  const HHRing& ring() const { return ring_; }

 private:
  std::unique_ptr<FreeBimoduleResolution> bar_;
  std::unique_ptr<YonedaAlgebra> cochains_;
  HHRing ring_;
};

}  // namespace smashcoh
