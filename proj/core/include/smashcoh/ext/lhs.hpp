#pragma once

#include "smashcoh/ext/ext_pipeline.hpp"
#include "smashcoh/spectral/spectral_sequence.hpp"

namespace smashcoh {

/// kG acting on kN through the permutation matrices of a validated action by automorphisms,
/// so that kN # kG = k(N x| G). Throws NotAnAction.
ModuleAlgebraAction lhs_action(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act, const Field& f);

/// The trivial module k over k(N x| G).
SmashModule trivial_group_module(const ModuleAlgebraAction& act);

/// Z/3 x| Z/2 with the generator of Z/2 acting by inversion.
struct SemidirectData {
  FiniteGroup n, g;
  GroupAction action;
};
SemidirectData s3_as_semidirect();

struct LHSReport {
  /// dims[p][q], p + q <= maxdeg, of the column-filtration pages.
  std::vector<std::vector<int>> e2, einfty;
  /// H^p(G, H^q(N, k)) computed separately from the inner cohomology.
  std::vector<std::vector<int>> e2_direct;
  HHRing abutment;
  /// H^n(N x| G, k) from inhomogeneous cochains.
  std::vector<int> oracle;
  /// Failed page, E_inf and oracle checks.
  std::vector<std::string> mismatches;
};

/// Ext_{k(N x| G)}(k, k) through the double complex, with its column spectral sequence.
LHSReport lhs_specialize(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act, const Field& f, int maxdeg);

}  // namespace smashcoh
