#include "smashcoh/ext/ext_pipeline.hpp"

namespace smashcoh {

namespace {

/// Applies a degreewise map of inner algebras to every (p, q) block of Hom_Gamma(L, -).
std::vector<SparseMatrix> blockwise(const GammaHomDoubleComplex& src, const GammaHomDoubleComplex& dst,
                                    const std::vector<SparseMatrix>& inner) {
  std::vector<SparseMatrix> out;
  const Field& f = src.complex().field();
  for (int n = 0; n <= src.top(); ++n) {
    SparseMatrix m(f, dst.complex().dim(n), src.complex().dim(n));
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      for (std::int64_t b = 0; b < src.L().base_dim(p); ++b)
        for (std::int64_t w = 0; w < src.inner_dim(q); ++w) {
          Accumulator col;
          for (const auto& [w2, c] : inner[q].column(static_cast<int>(w)).terms) col.add(dst.index(p, q, b, w2), c);
          m.set_column(static_cast<int>(src.index(p, q, b, w)), col.finish());
        }
    }
    out.push_back(std::move(m));
  }
  return out;
}

void append(std::vector<std::string>& out, const std::string& prefix, const std::vector<std::string>& more) {
  for (const auto& s : more) out.push_back(prefix + s);
}

}  // namespace

ExtPipeline::ExtPipeline(ModuleAlgebraAction act, SmashModule m, ExtOptions opts)
    : act_(std::move(act)), m_(std::move(m)), opts_(std::move(opts)) {
  int top = opts_.top;
  hh_ = std::make_unique<HHPipeline>(
      act_, PipelineOptions{top, false, opts_.sigma, endomorphism_extension(m_), opts_.left_side});
  const FreeBimoduleResolution& k = hh_->K();
  yoneda_ = std::make_unique<YonedaAlgebra>(free_dg_data(k), module_pair(m_, m_, false), top, yoneda_gamma(k, m_, m_));
  dc_ = std::make_unique<GammaHomDoubleComplex>(hh_->L(), hh_->tensor_square(), hh_->sigma(), *yoneda_, top);
  adj_ = adjunction_iso(k, m_.dim, m_.dim, top);
  total_adj_ = blockwise(hh_->double_complex(), *dc_, adj_.forward);
  total_adj_inv_ = blockwise(*dc_, hh_->double_complex(), adj_.backward);
  if (!opts_.left_side) return;
  const SmashComplex& x = hh_->smash_complex();
  left_ = std::make_unique<YonedaAlgebra>(free_dg_data(x, &hh_->smash_diagonal()), module_pair(m_, m_, true), top);
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= top; ++n) dims.push_back(x.base_dim(n));
  left_adj_ = adjunction_iso(dims, m_.field(), m_.dim, m_.dim);
  for (int n = 0; n <= top; ++n) composite_.push_back(total_adj_[n] * hh_->xi().xi(n) * left_adj_.backward[n]);
}

std::vector<std::string> ExtPipeline::check_adjunction(int max_total) const {
  std::vector<std::string> out;
  const HomAeAlgebra& w = hh_->inner();
  append(out, "", adj_.check(w.complex(), yoneda_->complex()));
  ModuleComplex direct = hom_ae_bimodule_complex(hh_->K(), m_, m_, opts_.top);
  for (int q = 0; q < opts_.top; ++q)
    if (direct.d(q) != w.complex().d(q))
      out.push_back("Hom_{A^e}(K, End M) differs from the End(M)-coefficient cochains in degree " + std::to_string(q));
  for (int q = 0; q <= opts_.top; ++q)
    for (int g = 0; g < act_.hopf.dim(); ++g)
      if (direct.family("right:Gamma").ops[q][g] != w.right_action(q, g))
        out.push_back("right Gamma-actions on Hom_{A^e}(K, End M) differ in degree " + std::to_string(q));
  append(out, "", check_multiplicative_map(w, *yoneda_, adj_.forward, max_total));
  append(out, "", check_augmentation_equivariance(hh_->K(), m_));
  return out;
}

std::vector<std::string> ExtPipeline::check_double_complex(int max_total) const {
  std::vector<std::string> out;
  append(out, "double complex: ",
         check_chain_isomorphism(hh_->double_complex().complex(), dc_->complex(), total_adj_, &total_adj_inv_));
  append(out, "double complex: ", check_multiplicative_map(hh_->double_complex(), *dc_, total_adj_, max_total));
  return out;
}

std::vector<std::string> ExtPipeline::check_composite(int max_total) const {
  if (!left_) throw std::logic_error("ExtPipeline: left side not built");
  std::vector<std::string> out;
  std::vector<SparseMatrix> inverse;
  for (int n = 0; n <= opts_.top; ++n)
    inverse.push_back(left_adj_.forward[n] * hh_->xi().phi(n) * total_adj_inv_[n]);
  append(out, "composite: ", check_chain_isomorphism(left_->complex(), dc_->complex(), composite_, &inverse));
  append(out, "composite: ", check_multiplicative_map(*left_, *dc_, composite_, max_total));
  return out;
}

std::vector<int> ext_pair_dims(const ModuleAlgebraAction& act, const SmashModule& m, const SmashModule& n, int maxdeg) {
  int top = maxdeg + 1;
  FreeBimoduleResolution k = bar_resolution(act.algebra, act, top, false);
  FreeRightComplex l = trivial_module_resolution(act.hopf, top);
  TensorSquare t(l, top);
  LDiagonal s = act.hopf.group() ? sigma_alexander_whitney(t) : sigma_lifted(t);
  YonedaAlgebra y(free_dg_data(k), module_pair(m, n, false), top, yoneda_gamma(k, m, n));
  GammaHomDoubleComplex dc(l, t, s, y, top);
  std::vector<int> dims;
  for (int i = 0; i <= maxdeg; ++i) dims.push_back(homology(dc.complex(), i).dim());
  return dims;
}

ExtOracle::ExtOracle(const SmashModule& m, int maxdeg) {
  bar_ = std::make_unique<FreeBimoduleResolution>(bar_resolution(smash_product(m.action), std::nullopt, maxdeg + 1, true));
  cochains_ = std::make_unique<YonedaAlgebra>(free_dg_data(*bar_), module_pair(m, m, true), maxdeg + 1);
  ring_ = hh_ring(static_cast<const DgAlgebra&>(*cochains_), maxdeg);
}

}  // namespace smashcoh
