#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smashcoh/linalg/matrix.hpp"

namespace smashcoh {

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Associative unital algebra given by structure constants on a labelled basis.
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  /// table[i * dim + j] = e_i e_j.
  FinDimAlgebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;

  const SparseVec& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Vec& unit() const { return unit_; }
  /// Index of the unit when it is a basis vector, otherwise -1.
  int unit_index() const { return unit_index_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// x -> e_i x and x -> x e_i.
  Matrix left_mult(int i) const;
  Matrix right_mult(int i) const;
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;
  /// dim x dim^2 matrix of the multiplication map.
  Matrix mult_matrix() const;
  Vec basis_vec(int i) const { return unit_vec(field_, static_cast<std::size_t>(dim_), static_cast<std::size_t>(i)); }

  /// Same field, structure constants and unit.
  friend bool operator==(const FinDimAlgebra& a, const FinDimAlgebra& b);

 private:
  Field field_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vec unit_;
  int unit_index_ = -1;
};

/// Associativity and unit violations, naming the failing basis triple/element.
std::vector<std::string> validate_algebra(const FinDimAlgebra& a);

FinDimAlgebra opposite(const FinDimAlgebra& a);
/// A^e = A^op (x) A with (a(x)b)(a'(x)b') = a'a (x) bb'; basis index i*dim+j.
FinDimAlgebra enveloping(const FinDimAlgebra& a);
/// Componentwise product on A (x) B.
FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b);
/// Truncated polynomial ring k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
FinDimAlgebra truncated_polynomial(const Field& f, int n, const std::string& var = "x");
/// Upper-triangular 2x2 matrices, basis e11, e12, e22.
FinDimAlgebra upper_triangular_2(const Field& f);
/// Full matrix algebra M_n(k), basis E_ij at index i*n+j.
FinDimAlgebra matrix_algebra(const Field& f, int n);
/// Center as a subspace basis.
std::vector<Vec> center(const FinDimAlgebra& a);

/// A-bimodule given by action matrices for every basis element.
struct BimoduleStructure {
  FinDimAlgebra algebra;
  int carrier_dim = 0;
  std::vector<Matrix> left;   // left[i]: m -> e_i m
  std::vector<Matrix> right;  // right[i]: m -> m e_i
};

std::vector<std::string> validate_bimodule(const BimoduleStructure& b);
/// A as a bimodule over itself.
BimoduleStructure regular_bimodule(const FinDimAlgebra& a);

}  // namespace smashcoh
