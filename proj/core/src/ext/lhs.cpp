#include "smashcoh/ext/lhs.hpp"

#include "smashcoh/ext/group_cohomology.hpp"
#include "smashcoh/spectral/checks.hpp"

namespace smashcoh {

ModuleAlgebraAction lhs_action(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act, const Field& f) {
  validate_group_action(n, g, act);
  HopfAlgebra kn = group_algebra(n, f), kg = group_algebra(g, f);
  std::vector<Matrix> per;
  for (int i = 0; i < g.order(); ++i) {
    Matrix p(f, n.order(), n.order());
    for (int j = 0; j < n.order(); ++j) p.set(act.perm[i][j], j, f.one());
    per.push_back(std::move(p));
  }
  return group_action(kg, kn.algebra(), std::move(per));
}

SmashModule trivial_group_module(const ModuleAlgebraAction& act) {
  return character_module(act, Vec(static_cast<std::size_t>(act.algebra.dim()), act.field().one()));
}

SemidirectData s3_as_semidirect() {
  FiniteGroup n = cyclic_group(3, "r"), g = cyclic_group(2, "s");
  GroupAction a{{{0, 1, 2}, {0, 2, 1}}};
  return {n, g, a};
}

LHSReport lhs_specialize(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act, const Field& f, int maxdeg) {
  ModuleAlgebraAction a = lhs_action(n, g, act, f);
  ExtPipeline pl(a, trivial_group_module(a), {maxdeg + 2, "auto", false});
  const GammaHomDoubleComplex& dc = pl.double_complex();
  LHSReport rep;
  rep.abutment = pl.ring(maxdeg);
  SpectralSequence ss(dc.total(), &dc, Filtration::column, maxdeg + 2, maxdeg);
  rep.e2 = ss.table(2);
  rep.einfty = ss.einfty_table();
  rep.e2_direct = gamma_ext_of_inner_cohomology(dc, maxdeg);
  rep.oracle = group_cohomology_oracle(semidirect_product(n, g, act), f, maxdeg).dims();
  for (auto& m : ss.check_pages()) rep.mismatches.push_back(m);
  for (auto& m : einfty_vs_gr(ss, &rep.abutment.ring)) rep.mismatches.push_back(m);
  for (auto& m : check_column_e2(dc, ss)) rep.mismatches.push_back(m);
  if (rep.oracle != rep.abutment.dims()) rep.mismatches.push_back("abutment differs from the group cohomology oracle");
  return rep;
}

}  // namespace smashcoh
