#pragma once

#include <stdexcept>
#include <vector>

#include "smashcoh/complexes/module_complex.hpp"

namespace smashcoh {

class SquareCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First-quadrant cochain double complex truncated to p + q <= N, stored with
/// commuting squares. dh[p][q]: C^{p,q} -> C^{p+1,q}, dv[p][q]: C^{p,q} -> C^{p,q+1}.
struct DoubleComplex {
  Field field;
  int N = 0;
  std::vector<std::vector<std::int64_t>> dims;
  std::vector<std::vector<SparseMatrix>> dh, dv;

  DoubleComplex() = default;
  DoubleComplex(Field f, int n, std::vector<std::vector<std::int64_t>> slot_dims);
  std::int64_t dim(int p, int q) const;
};

enum class Filtration { column, row };

/// Tot^n = sum_{p+q=n} C^{p,q} with D = dh + (-1)^p dv, ordered by increasing p.
class TotalComplex {
 public:
  TotalComplex() = default;
  /// Throws SquareCheckFailed when a square fails to commute or D^2 != 0.
  explicit TotalComplex(DoubleComplex dc);

  const DoubleComplex& source() const { return dc_; }
  const ModuleComplex& complex() const { return tot_; }
  int top() const { return dc_.N; }
  std::int64_t offset(int n, int p) const { return offsets_[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)]; }
  /// Filtration degree of a coordinate: p for the column filtration, q for the row filtration.
  int level(int n, std::int64_t idx, Filtration which) const;
  /// F^s Tot^n as a coordinate subspace.
  Subspace filtration(int n, Filtration which, int s) const;
  /// The (p, n-p) block of a total cochain.
  Vec block(int n, int p, const Vec& x) const;
  void add_block(int n, int p, Vec& x, const Vec& blk) const;

 private:
  DoubleComplex dc_;
  ModuleComplex tot_;
  std::vector<std::vector<std::int64_t>> offsets_;
};

/// dim gr^s H^n for s = 0..n, where gr^s = image H(F^s) / image H(F^{s+1}).
std::vector<int> graded_cohomology_dims(const TotalComplex& t, int n, Filtration which);

}  // namespace smashcoh
