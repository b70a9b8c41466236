#pragma once

#include <string>
#include <vector>

#include "smashcoh/hochschild/cochains.hpp"

namespace smashcoh {

/// Left A # Gamma-module: rho[r] is the action of the smash basis element r = a * dim Gamma + g.
struct SmashModule {
  ModuleAlgebraAction action;
  int dim = 0;
  std::vector<Matrix> rho;

  const Field& field() const { return action.field(); }
  /// Action of a (x) 1 and 1 (x) g.
  Matrix of_a(int a) const;
  Matrix of_gamma(int g) const;
  /// Action of an arbitrary element of Gamma.
  Matrix of_gamma(const SparseVec& gamma) const;
};

/// Builds rho(a # g) = rho_A(a) rho_Gamma(g); throws ValidationError when the result is not a module.
SmashModule smash_module(const ModuleAlgebraAction& act, const std::vector<Matrix>& a_action,
                         const std::vector<Matrix>& gamma_action);
/// One-dimensional module with A acting through the character chi_a and Gamma through the counit.
SmashModule character_module(const ModuleAlgebraAction& act, const Vec& chi_a);
/// A # Gamma acting on itself by left multiplication.
SmashModule regular_module(const ModuleAlgebraAction& act);

/// Associativity, unitality and gamma (a m) = (gamma_1 . a)(gamma_2 m) on basis triples.
std::vector<std::string> validate_smash_module(const SmashModule& m);

/// Hom_k(M, N) with (r f r')(x) = r f(r' x); index y * dim M + x for the matrix entry (y, x).
BimoduleStructure hom_k_bimodule(const SmashModule& m, const SmashModule& n);
/// End_k(M) as an algebra extension of A # Gamma.
AlgebraExtension endomorphism_extension(const SmashModule& m);

}  // namespace smashcoh
