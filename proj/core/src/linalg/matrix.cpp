#include "smashcoh/linalg/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace smashcoh {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec scaled(const Vec& a, const Scalar& c) {
  Vec r(a.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = a[i] * c;
  return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

Vec SparseVec::to_dense(std::size_t n) const {
  Vec v(n);
  for (const auto& [i, c] : terms) v[static_cast<std::size_t>(i)] = c;
  return v;
}

SparseVec SparseVec::from_dense(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.terms.emplace_back(static_cast<std::int64_t>(i), v[i]);
  return s;
}

Scalar SparseVec::at(std::int64_t idx) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), idx,
                             [](const auto& t, std::int64_t i) { return t.first < i; });
  if (it != terms.end() && it->first == idx) return it->second;
  return Scalar();
}

void Accumulator::add(std::int64_t idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(idx, c);
  if (!inserted) it->second += c;
}

void Accumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& [i, x] : v.terms) add(i, x);
  } else {
    for (const auto& [i, x] : v.terms) add(i, x * c);
  }
}

SparseVec Accumulator::finish() const {
  SparseVec s;
  s.terms.reserve(map_.size());
  for (const auto& [i, c] : map_)
    if (!c.is_zero()) s.terms.emplace_back(i, c);
  std::sort(s.terms.begin(), s.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return s;
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  Matrix m(f, static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols, int rows) {
  int r = rows >= 0 ? rows : (cols.empty() ? 0 : static_cast<int>(cols[0].size()));
  Matrix m(f, r, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != r) throw std::invalid_argument("ragged columns");
    for (int i = 0; i < r; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, f.from_int(rows[i][j]));
  return m;
}

void Matrix::set(int r, int c, const Scalar& s) {
  auto& slot = a_[static_cast<std::size_t>(r) * cols_ + c];
  if (field_.is_prime() && s.modulus() == 0 && !s.is_zero())
    slot = field_.convert(s);
  else
    slot = s;
}

void Matrix::add_to(int r, int c, const Scalar& s) {
  if (s.is_zero()) return;
  auto& slot = a_[static_cast<std::size_t>(r) * cols_ + c];
  slot += s;
  if (field_.is_prime() && slot.modulus() == 0 && !slot.is_zero()) slot = field_.convert(slot);
}

Vec Matrix::row(int r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
             a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

Vec Matrix::col(int c) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void Matrix::set_col(int c, const Vec& v) {
  for (int i = 0; i < rows_; ++i) set(i, c, v[i]);
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec r(static_cast<std::size_t>(rows_));
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& x = (*this)(i, j);
      if (!x.is_zero()) r[i] += x * v[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.a_[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o(k, j);
        if (!y.is_zero()) r.a_[static_cast<std::size_t>(i) * o.cols_ + j] += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix m(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.a_[static_cast<std::size_t>(i) * nc + j] = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) set(r0 + i, c0 + j, m(i, j));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.convert((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix tensor(const Matrix& m1, const Matrix& m2) {
  Matrix r(m1.field(), m1.rows() * m2.rows(), m1.cols() * m2.cols());
  for (int i = 0; i < m1.rows(); ++i)
    for (int j = 0; j < m1.cols(); ++j) {
      const Scalar& x = m1(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < m2.rows(); ++k)
        for (int l = 0; l < m2.cols(); ++l) {
          const Scalar& y = m2(k, l);
          if (!y.is_zero()) r.set(i * m2.rows() + k, j * m2.cols() + l, x * y);
        }
    }
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.field(), m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) s.columns_[j] = SparseVec::from_dense(m.col(j));
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_, cols_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : columns_[j].terms) m.set(static_cast<int>(i), j, c);
  return m;
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
  std::vector<SparseVec> rows(static_cast<std::size_t>(rows_));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : columns_[j].terms) rows[i].terms.emplace_back(j, c);
  return rows;
}

Vec SparseMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec r(static_cast<std::size_t>(rows_));
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, c] : columns_[j].terms) r[i] += c * v[j];
  }
  return r;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  Accumulator acc;
  for (const auto& [j, x] : v.terms) acc.add(columns_[static_cast<std::size_t>(j)], x);
  return acc.finish();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix r(field_, rows_, o.cols_);
  for (int j = 0; j < o.cols_; ++j) r.columns_[j] = apply(o.columns_[j]);
  return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sparse sum: shape mismatch");
  SparseMatrix r(field_, rows_, cols_);
  for (int j = 0; j < cols_; ++j) {
    Accumulator acc;
    acc.add(columns_[j]);
    acc.add(o.columns_[j]);
    r.columns_[j] = acc.finish();
  }
  return r;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix r(field_, rows_, cols_);
  if (c.is_zero()) return r;
  for (int j = 0; j < cols_; ++j) {
    r.columns_[j] = columns_[j];
    for (auto& t : r.columns_[j].terms) t.second *= c;
  }
  return r;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols_, rows_);
  auto rows = row_vectors();
  for (int i = 0; i < rows_; ++i) t.columns_[i] = std::move(rows[i]);
  return t;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

}  // namespace smashcoh
