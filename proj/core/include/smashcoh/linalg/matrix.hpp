#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smashcoh/linalg/scalar.hpp"

namespace smashcoh {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Scalar& c);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

/// Sorted (index, nonzero coefficient) list.
struct SparseVec {
  std::vector<std::pair<std::int64_t, Scalar>> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  Vec to_dense(std::size_t n) const;
  static SparseVec from_dense(const Vec& v);
  Scalar at(std::int64_t idx) const;
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms == b.terms; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }
};

/// Hash-map accumulator producing a SparseVec with zeros dropped.
class Accumulator {
 public:
  void add(std::int64_t idx, const Scalar& c);
  void add(const SparseVec& v, const Scalar& c = Scalar(1));
  bool empty() const { return map_.empty(); }
  SparseVec finish() const;

 private:
  std::unordered_map<std::int64_t, Scalar> map_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, int cols = -1);
  static Matrix from_cols(const Field& f, const std::vector<Vec>& cols, int rows = -1);
  /// Integer entries, row-major.
  static Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, const Scalar& s);
  void add_to(int r, int c, const Scalar& s);

  Vec row(int r) const;
  Vec col(int c) const;
  void set_col(int c, const Vec& v);
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Rows [r0, r0+nr), columns [c0, c0+nc).
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& m);
  std::string to_string() const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Kronecker product, left factor index slowest.
Matrix tensor(const Matrix& m1, const Matrix& m2);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Column-compressed sparse matrix; columns are images of basis vectors.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

  static SparseMatrix from_dense(const Matrix& m);
  Matrix to_dense() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const SparseVec& column(int c) const { return columns_[static_cast<std::size_t>(c)]; }
  void set_column(int c, SparseVec v) { columns_[static_cast<std::size_t>(c)] = std::move(v); }
  std::vector<SparseVec> row_vectors() const;

  Vec apply(const Vec& v) const;
  SparseVec apply(const SparseVec& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseMatrix transpose() const;
  bool is_zero() const;
  std::size_t nnz() const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> columns_;
};

}  // namespace smashcoh
