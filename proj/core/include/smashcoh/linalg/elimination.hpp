#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "smashcoh/linalg/matrix.hpp"

namespace smashcoh {

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotASubspace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced row-echelon data of a row list: rows[i] has a leading 1 at pivots[i],
/// pivots increase, and every pivot column is zero in all other rows.
struct Echelon {
  int ncols = 0;
  std::vector<SparseVec> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(pivots.size()); }
  /// Reduces v against the rows; returns the remainder.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
};

Echelon echelon(const Field& f, std::vector<SparseVec> rows, int ncols);

/// Finite-dimensional subspace of k^n, stored by a reduced echelon basis so that
/// equal spans have equal representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, int ambient_dim);
  static Subspace span(const Field& f, int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace span(const Field& f, int ambient_dim, std::vector<SparseVec> vectors);
  static Subspace full(const Field& f, int ambient_dim);
  /// Column space of m.
  static Subspace image(const Matrix& m);
  static Subspace image(const SparseMatrix& m);

  const Field& field() const { return field_; }
  int ambient_dim() const { return ech_.ncols; }
  int dim() const { return ech_.rank(); }
  const Echelon& echelon_form() const { return ech_; }
  std::vector<Vec> basis() const;
  const std::vector<SparseVec>& sparse_basis() const { return ech_.rows; }
  /// Basis vectors as columns.
  Matrix basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const SparseVec& v) const { return ech_.contains(v); }
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  Echelon ech_;
};

std::pair<Matrix, std::vector<int>> rref(const Matrix& m);
int rank(const Matrix& m);
int rank(const SparseMatrix& m);

Subspace kernel_basis(const Matrix& m);
Subspace kernel_basis(const SparseMatrix& m);

/// One solution x of m x = target; throws NoSolution when target is not in the image.
Vec solve(const Matrix& m, const Vec& target);
/// Column-wise solve of m X = targets.
Matrix solve(const Matrix& m, const Matrix& targets);
/// Column-wise solve for several sparse right-hand sides.
std::vector<SparseVec> solve(const SparseMatrix& m, const std::vector<SparseVec>& targets);

struct QuotientData {
  /// Representatives (as vectors in the ambient coordinates) of a basis of ambient/sub.
  std::vector<Vec> representatives;
  /// dim(quotient) x ambient_dim; sends ambient vectors to class coordinates and kills sub.
  Matrix projection;

  int dim() const { return static_cast<int>(representatives.size()); }
  Vec project(const Vec& v) const { return projection.apply(v); }
};

/// Representatives extend the sub basis by the earliest ambient basis vectors
/// (in echelon order) that are independent modulo sub.
QuotientData quotient_data(const Subspace& ambient, const Subspace& sub);

}  // namespace smashcoh
