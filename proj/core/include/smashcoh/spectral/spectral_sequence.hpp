#pragma once

#include <map>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashcoh/complexes/dg_algebra.hpp"
#include "smashcoh/complexes/double_complex.hpp"

namespace smashcoh {

class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E_r^{s,t} = Z_r^{s} / (Z_{r-1}^{s+1} + D Z_{r-1}^{s-r+1}) in Tot^{s+t}, where
/// Z_r^s = { x in F^s : D x in F^{s+r} }. s is the filtration degree (p for the column
/// filtration, q for the row filtration) and t the complementary one.
struct PageSlot {
  Subspace cycles, denominator;
  QuotientData quotient;
  int dim() const { return quotient.dim(); }
};

struct SpectralPage {
  int r = 1;
  std::map<std::pair<int, int>, PageSlot> slots;
  /// d_r: E_r^{s,t} -> E_r^{s+r,t-r+1}, keyed by source.
  std::map<std::pair<int, int>, Matrix> d;

  int dim(int s, int t) const;
};

/// Pages E_1..E_{r_max} of a filtered total complex through total degree maxdeg. Needs the
/// complex through degree maxdeg + 2, so that outgoing differentials have exact targets.
class SpectralSequence {
 public:
  /// alg may be null; then no page products are available.
  SpectralSequence(const TotalComplex& tot, const DgAlgebra* alg, Filtration which, int r_max, int maxdeg);

  Filtration filtration() const { return which_; }
  int maxdeg() const { return maxdeg_; }
  int r_max() const { return static_cast<int>(pages_.size()); }
  const SpectralPage& page(int r) const;
  int dim(int r, int s, int t) const { return page(r).dim(s, t); }
  const TotalComplex& total() const { return *tot_; }
  const DgAlgebra* algebra() const { return alg_; }

  /// (p, q) coordinates of the slot with filtration degree s and complementary degree t.
  std::pair<int, int> pq(int s, int t) const { return which_ == Filtration::column ? std::pair{s, t} : std::pair{t, s}; }
  /// Page at which E^{s,t} is final: first r with r > max(s, t + 1).
  static int stable_page(int s, int t) { return std::max(s, t + 1) + 1; }
  /// E_inf^{s,t}; throws NotStabilized when the page was not computed.
  const PageSlot& einfty(int s, int t) const;
  int einfty_dim(int s, int t) const { return einfty(s, t).dim(); }

  /// Product of classes with coordinates a in E_r^{s1,t1} and b in E_r^{s2,t2}.
  Vec product(int r, int s1, int t1, const Vec& a, int s2, int t2, const Vec& b) const;
  /// Class of the image of a representative under d_r, as coordinates.
  Vec differential(int r, int s, int t, const Vec& a) const;

  /// d_r d_r = 0, H(E_r) = E_{r+1} dimensionwise, derivation law and representative
  /// independence of products, for total degrees up to maxdeg.
  std::vector<std::string> check_pages(std::size_t max_failures = 10) const;

  /// dims[p][q] of page r (column/row orientation undone), p + q <= maxdeg.
  std::vector<std::vector<int>> table(int r) const;
  std::vector<std::vector<int>> einfty_table() const;
  /// Human-readable page table.
  std::string format(int r) const;

 private:
  const Subspace& z(int r, int s, int n);
  Vec lift(int r, int s, int t, const Vec& a) const;

  const TotalComplex* tot_;
  const DgAlgebra* alg_;
  Filtration which_;
  int maxdeg_;
  std::map<std::tuple<int, int, int>, Subspace> zcache_;
  std::vector<SpectralPage> pages_;
};

/// E_inf^{s,t} maps isomorphically onto gr^s H^{s+t}, page products agree with products in gr H,
/// and sum_s dim E_inf^{s,n-s} = dim H^n (and the ring's dimensions, when given). Throws NotStabilized.
std::vector<std::string> einfty_vs_gr(const SpectralSequence& ss, const CohomologyRing* ring);

}  // namespace smashcoh
