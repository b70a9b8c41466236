#include "smashcoh/spectral/checks.hpp"

namespace smashcoh {

namespace {

/// dim Ext^p_Gamma(k, V) for p = 0..maxp, V given by right-action matrices.
std::vector<int> gamma_ext(const FreeRightComplex& l, const std::vector<SparseMatrix>& action, int dim, int maxp) {
  const Field& f = l.hopf.field();
  ModuleComplex lfull = right_complex(l, false);
  ModuleComplex v(f, 0, {dim}, -1);
  v.add_family(ActionFamily{"right:Gamma", {action}});
  HomComplex h = hom_complex(lfull, v, {"right:Gamma"});
  std::vector<int> out;
  for (int p = 0; p <= maxp; ++p) out.push_back(homology(h.complex, -p).dim());
  return out;
}

std::vector<std::string> compare(const std::vector<std::vector<int>>& want, const SpectralSequence& ss, int r,
                                 const std::string& what) {
  std::vector<std::string> out;
  auto got = ss.table(r);
  for (std::size_t p = 0; p < want.size() && p < got.size(); ++p)
    for (std::size_t q = 0; q < want[p].size() && q < got[p].size(); ++q)
      if (want[p][q] != got[p][q])
        out.push_back(what + " at (" + std::to_string(p) + "," + std::to_string(q) + "): page has " +
                      std::to_string(got[p][q]) + ", independent value " + std::to_string(want[p][q]));
  return out;
}

}  // namespace

std::vector<std::vector<int>> gamma_ext_of_inner_cohomology(const GammaHomDoubleComplex& dc, int maxdeg) {
  const InnerAlgebra& w = dc.inner();
  const Field& f = w.complex().field();
  int gdim = w.hopf().dim();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(maxdeg + 1));
  for (int q = 0; q <= maxdeg; ++q) {
    Homology h = homology(w.complex(), q);
    std::vector<SparseMatrix> action;
    for (int g = 0; g < gdim; ++g) {
      Matrix m(f, h.dim(), h.dim());
      for (int i = 0; i < h.dim(); ++i) m.set_col(i, h.classify(w.right_action(q, g).apply(h.representatives[i])));
      action.push_back(SparseMatrix::from_dense(m));
    }
    auto ext = gamma_ext(dc.L(), action, h.dim(), maxdeg - q);
    for (int p = 0; p + q <= maxdeg; ++p) out[p].push_back(ext[p]);
  }
  return out;
}

std::vector<std::vector<int>> gamma_ext_of_inner_cochains(const GammaHomDoubleComplex& dc, int maxdeg) {
  const InnerAlgebra& w = dc.inner();
  int gdim = w.hopf().dim();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(maxdeg + 1));
  for (int q = 0; q <= maxdeg; ++q) {
    std::vector<SparseMatrix> action;
    for (int g = 0; g < gdim; ++g) action.push_back(w.right_action(q, g));
    auto ext = gamma_ext(dc.L(), action, w.complex().dim(q), maxdeg - q);
    for (int p = 0; p + q <= maxdeg; ++p) out[p].push_back(ext[p]);
  }
  return out;
}

std::vector<std::string> check_column_e2(const GammaHomDoubleComplex& dc, const SpectralSequence& ss) {
  if (ss.filtration() != Filtration::column) throw std::invalid_argument("check_column_e2 needs the column filtration");
  if (ss.r_max() < 2) throw std::invalid_argument("check_column_e2 needs E_2");
  return compare(gamma_ext_of_inner_cohomology(dc, ss.maxdeg()), ss, 2, "E_2 != Ext_Gamma(k, H(W))");
}

std::vector<std::string> check_row_e1(const GammaHomDoubleComplex& dc, const SpectralSequence& ss) {
  if (ss.filtration() != Filtration::row) throw std::invalid_argument("check_row_e1 needs the row filtration");
  return compare(gamma_ext_of_inner_cochains(dc, ss.maxdeg()), ss, 1, "E_1 != Ext_Gamma(k, W)");
}

}  // namespace smashcoh
