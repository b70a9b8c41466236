#include "smashcoh/hochschild/pipeline.hpp"

namespace smashcoh {

HHPipeline::HHPipeline(ModuleAlgebraAction act, PipelineOptions opts) : act_(std::move(act)), opts_(std::move(opts)) {
  int top = opts_.top;
  ext_ = opts_.extension ? *opts_.extension : identity_extension(smash_product(act_));
  auto bad = validate_extension(ext_);
  if (!bad.empty()) throw ValidationError("invalid algebra extension", bad);
  k_ = std::make_unique<FreeBimoduleResolution>(bar_resolution(act_.algebra, act_, top, opts_.normalized_k));
  l_ = std::make_unique<FreeRightComplex>(trivial_module_resolution(act_.hopf, top));
  t_ = std::make_unique<TensorSquare>(*l_, top);
  std::string kind = opts_.sigma;
  if (kind == "auto") kind = act_.hopf.group() ? "aw" : "lifted";
  if (kind == "aw")
    sigma_ = std::make_unique<LDiagonal>(sigma_alexander_whitney(*t_));
  else if (kind == "lifted")
    sigma_ = std::make_unique<LDiagonal>(sigma_lifted(*t_));
  else
    throw std::invalid_argument("unknown sigma kind '" + kind + "'");
  w_ = std::make_unique<HomAeAlgebra>(*k_, smash_coefficients(act_, ext_), top);
  dc_ = std::make_unique<GammaHomDoubleComplex>(*l_, *t_, *sigma_, *w_, top);
  if (!opts_.smash_side) return;
  x_ = std::make_unique<SmashComplex>(*k_, *l_, top);
  diag_ = std::make_unique<SmashDiagonal>(*x_, *t_, *sigma_, top);
  c_ = std::make_unique<SmashCochains>(*x_, diag_.get(), ext_);
  xi_ = std::make_unique<XiIsomorphism>(*c_, *dc_);
}

}  // namespace smashcoh
