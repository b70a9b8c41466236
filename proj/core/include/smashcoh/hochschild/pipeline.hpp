#pragma once

#include <memory>
#include <optional>
#include <string>

#include "smashcoh/hochschild/hh_ring.hpp"

namespace smashcoh {

struct PipelineOptions {
  /// Cochains exist through degree top; cohomology is trusted through top - 1.
  int top = 4;
  bool normalized_k = false;
  /// "aw", "lifted" or "auto" (Alexander-Whitney for group algebras).
  std::string sigma = "auto";
  /// Defaults to B = A # Gamma.
  std::optional<AlgebraExtension> extension;
  /// Build K # L^, its diagonal and the Xi isomorphism as well as the double complex.
  bool smash_side = true;
};

/// Owns every object of the two cochain models for one action.
class HHPipeline {
 public:
  HHPipeline(ModuleAlgebraAction act, PipelineOptions opts);
  HHPipeline(const HHPipeline&) = delete;
  HHPipeline& operator=(const HHPipeline&) = delete;

  const ModuleAlgebraAction& action() const { return act_; }
  const PipelineOptions& options() const { return opts_; }
  const AlgebraExtension& extension() const { return ext_; }
  const FreeBimoduleResolution& K() const { return *k_; }
  const FreeRightComplex& L() const { return *l_; }
  const TensorSquare& tensor_square() const { return *t_; }
  const LDiagonal& sigma() const { return *sigma_; }
  const HomAeAlgebra& inner() const { return *w_; }
  const GammaHomDoubleComplex& double_complex() const { return *dc_; }
  bool has_smash_side() const { return x_ != nullptr; }
  const SmashComplex& smash_complex() const { return *x_; }
  const SmashDiagonal& smash_diagonal() const { return *diag_; }
  const SmashCochains& smash_cochains() const { return *c_; }
  const XiIsomorphism& xi() const { return *xi_; }

 private:
  ModuleAlgebraAction act_;
  PipelineOptions opts_;
  AlgebraExtension ext_;
  std::unique_ptr<FreeBimoduleResolution> k_;
  std::unique_ptr<FreeRightComplex> l_;
  std::unique_ptr<TensorSquare> t_;
  std::unique_ptr<LDiagonal> sigma_;
  std::unique_ptr<HomAeAlgebra> w_;
  std::unique_ptr<GammaHomDoubleComplex> dc_;
  std::unique_ptr<SmashComplex> x_;
  std::unique_ptr<SmashDiagonal> diag_;
  std::unique_ptr<SmashCochains> c_;
  std::unique_ptr<XiIsomorphism> xi_;
};

}  // namespace smashcoh
