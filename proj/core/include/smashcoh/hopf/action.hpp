#pragma once

#include <string>
#include <vector>

#include "smashcoh/hopf/hopf_algebra.hpp"

namespace smashcoh {

/// Gamma-module algebra structure on A: act[g] is the matrix of a -> e_g . a.
struct ModuleAlgebraAction {
  HopfAlgebra hopf;
  FinDimAlgebra algebra;
  std::vector<Matrix> act;

  const Field& field() const { return algebra.field(); }
  /// e_g . e_a as a sparse vector in A.
  SparseVec apply(int g, int a) const;
  /// gamma . a for arbitrary coordinates.
  Vec apply(const Vec& gamma, const Vec& a) const;
};

/// gamma . a = eps(gamma) a.
ModuleAlgebraAction trivial_action(const HopfAlgebra& h, const FinDimAlgebra& a);
/// Group acting on A through algebra automorphisms given per group element.
ModuleAlgebraAction group_action(const HopfAlgebra& kg, const FinDimAlgebra& a, std::vector<Matrix> per_element);
/// Z/2 on k[x]/(x^2) by x -> -x.
ModuleAlgebraAction sign_action_on_dual_numbers(const Field& f);
/// H4 on k[y]/(y^2): g.y = -y, x.1 = 0, x.y = 1.
ModuleAlgebraAction sweedler_on_dual_numbers(const Field& f);

/// Module axioms, measuring condition gamma(ab) = (gamma_1 a)(gamma_2 b), and gamma.1 = eps(gamma) 1.
std::vector<std::string> validate_action(const ModuleAlgebraAction& act);

/// A # Gamma on the basis a (x) g at index a*dim(Gamma) + g, with
/// (a g)(a' g') = a (g_1 . a') (x) g_2 g'. Throws ValidationError on invalid input.
FinDimAlgebra smash_product(const ModuleAlgebraAction& act);
/// a -> a (x) 1 and gamma -> 1 (x) gamma as matrices into A # Gamma.
Matrix smash_inclusion_A(const ModuleAlgebraAction& act);
Matrix smash_inclusion_Gamma(const ModuleAlgebraAction& act);

}  // namespace smashcoh
