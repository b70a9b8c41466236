#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smashcoh/hochschild/double_complex_hh.hpp"

namespace smashcoh {

struct HHRing {
  CohomologyRing ring;
  /// dim gr^p H^n for the column (Gamma) and row (A) filtrations; empty without a double complex.
  std::vector<std::vector<int>> gr_gamma, gr_a;

  int maxdeg() const { return ring.maxdeg; }
  std::vector<int> dims() const { return ring.dims(); }
  /// Classes of positive degree not in the span of products of lower positive-degree classes.
  std::vector<int> indecomposables() const;
  /// Dimensions, indecomposables per degree and the nonzero products of representatives.
  std::string sketch() const;
};

HHRing hh_ring(const DgAlgebra& dg, int maxdeg);
/// Also records both filtration gradings.
HHRing hh_ring(const GammaHomDoubleComplex& dc, int maxdeg);

/// HH(R, B) from the normalized bar resolution of R alone.
class HHOracle {
 public:
  HHOracle(const AlgebraExtension& ext, int maxdeg);
  HHOracle(const HHOracle&) = delete;
  HHOracle& operator=(const HHOracle&) = delete;
  const FreeBimoduleResolution& bar() const { return *bar_; }
  const HomAeAlgebra& cochains() const { return *cochains_; }
  const HHRing& ring() const { return ring_; }

 private:
  std::unique_ptr<FreeBimoduleResolution> bar_;
  std::unique_ptr<HomAeAlgebra> cochains_;
  HHRing ring_;
};

HHRing hh_oracle(const AlgebraExtension& ext, int maxdeg);

/// Pulls oracle classes back along a lifted comparison map K # L^ -> bar(R) and checks that it
/// is an isomorphism in every degree that carries the oracle products to the smash products.
std::vector<std::string> compare_with_oracle(const SmashCochains& c, const HHRing& ring, const HHOracle& oracle);

}  // namespace smashcoh
