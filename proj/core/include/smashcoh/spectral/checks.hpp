#pragma once

#include <string>
#include <vector>

#include "smashcoh/hochschild/double_complex_hh.hpp"
#include "smashcoh/spectral/spectral_sequence.hpp"

namespace smashcoh {

/// Ext_Gamma(k, H^q(W)) computed from the generic Hom complex out of the full resolution L,
/// with Gamma acting on H^q(W) through representatives: dims[p][q] for p + q <= maxdeg.
std::vector<std::vector<int>> gamma_ext_of_inner_cohomology(const GammaHomDoubleComplex& dc, int maxdeg);
/// Ext_Gamma(k, W^q) for the inner cochains themselves.
std::vector<std::vector<int>> gamma_ext_of_inner_cochains(const GammaHomDoubleComplex& dc, int maxdeg);

/// Column-filtration E_2 against gamma_ext_of_inner_cohomology.
std::vector<std::string> check_column_e2(const GammaHomDoubleComplex& dc, const SpectralSequence& ss);
/// Row-filtration E_1 against gamma_ext_of_inner_cochains.
std::vector<std::string> check_row_e1(const GammaHomDoubleComplex& dc, const SpectralSequence& ss);

}  // namespace smashcoh
