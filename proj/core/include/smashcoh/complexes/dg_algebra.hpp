#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "smashcoh/complexes/module_complex.hpp"

namespace smashcoh {

/// Cochain complex (degrees 0..hi) with a degree-additive bilinear product,
/// possibly associative only up to homotopy.
class DgAlgebra {
 public:
  virtual ~DgAlgebra() = default;
  virtual const ModuleComplex& complex() const = 0;
  /// x in degree n1, y in degree n2, result in degree n1 + n2 (requires n1 + n2 <= hi).
  virtual Vec product(int n1, const Vec& x, int n2, const Vec& y) const = 0;
  /// Cohomology is trusted through this degree.
  virtual int trusted_degree() const { return complex().trusted_hi; }
};

/// Basis pairs (x, y) with n1 + n2 < hi violating D(xy) = D(x)y + (-1)^{n1} x D(y).
std::vector<std::string> check_leibniz(const DgAlgebra& a, int max_total, std::size_t max_failures = 5);

class RepresentativeDependence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f[n]: src^n -> dst^n. Chain-map squares through the shorter top, and f[n] g[n] = id,
/// g[n] f[n] = id when an inverse is supplied.
std::vector<std::string> check_chain_isomorphism(const ModuleComplex& src, const ModuleComplex& dst,
                                                 const std::vector<SparseMatrix>& f,
                                                 const std::vector<SparseMatrix>* inverse = nullptr);
/// f(xy) = f(x) f(y) on basis pairs with n1 + n2 <= max_total.
std::vector<std::string> check_multiplicative_map(const DgAlgebra& src, const DgAlgebra& dst,
                                                  const std::vector<SparseMatrix>& f, int max_total,
                                                  std::size_t max_failures = 5);

/// Cohomology with products of the chosen representatives, projected to classes.
struct CohomologyRing {
  int maxdeg = 0;
  std::vector<Homology> groups;
  /// table[n1][n2][i * dim(n2) + j] = class of rep_i rep_j in degree n1 + n2.
  std::vector<std::vector<std::vector<Vec>>> table;

  std::vector<int> dims() const;
  int dim(int n) const { return groups[static_cast<std::size_t>(n)].dim(); }
  const Vec& product(int n1, int i, int n2, int j) const;
  /// Product of arbitrary classes given in coordinates.
  Vec multiply(int n1, const Vec& a, int n2, const Vec& b) const;
};

/// Products are recomputed after perturbing the representatives by random
/// coboundaries; any change raises RepresentativeDependence.
CohomologyRing cohomology_ring(const DgAlgebra& a, int maxdeg, int trials = 3, std::uint64_t seed = 0x5eed);

/// Random vector with small integer entries (deterministic for a fixed generator state).
Vec random_vector(const Field& f, int n, std::uint64_t& state);

}  // namespace smashcoh
