#pragma once

#include <vector>

#include "smashcoh/complexes/dg_algebra.hpp"
#include "smashcoh/hopf/group.hpp"

namespace smashcoh {

/// Normalized inhomogeneous cochains C^n(G, k) on tuples of non-identity elements, with cup product
/// (f g)(g_1..g_{p+q}) = f(g_1..g_p) g(g_{p+1}..g_{p+q}). Trivial coefficients.
class GroupCochains : public DgAlgebra {
 public:
  GroupCochains(FiniteGroup g, Field f, int top);
  const ModuleComplex& complex() const override { return complex_; }
  Vec product(int n1, const Vec& x, int n2, const Vec& y) const override;
  const FiniteGroup& group() const { return g_; }

 private:
  FiniteGroup g_;
  int top_;
  ModuleComplex complex_;
};

/// H^*(G, k) as a ring through maxdeg.
CohomologyRing group_cohomology_oracle(const FiniteGroup& g, const Field& f, int maxdeg);

}  // namespace smashcoh
