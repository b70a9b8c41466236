#include "smashcoh/hopf/algebra.hpp"

#include <algorithm>

#include "smashcoh/linalg/elimination.hpp"

namespace smashcoh {

FinDimAlgebra::FinDimAlgebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit)
    : field_(f), dim_(static_cast<int>(labels.size())), labels_(std::move(labels)), table_(std::move(table)),
      unit_(std::move(unit)) {
  if (dim_ <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (table_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw std::invalid_argument("structure table has wrong size");
  if (unit_.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("unit has wrong length");
  for (auto& s : unit_) s = field_.convert(s);
  for (auto& entry : table_)
    for (auto& t : entry.terms) {
      if (t.first < 0 || t.first >= dim_) throw std::invalid_argument("structure constant index out of range");
      t.second = field_.convert(t.second);
    }
  int nz = 0;
  for (int i = 0; i < dim_; ++i)
    if (!unit_[i].is_zero()) {
      ++nz;
      if (unit_[i].is_one()) unit_index_ = i;
    }
  if (nz != 1) unit_index_ = -1;
}

int FinDimAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Vec FinDimAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec r(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, x] : product(i, j).terms) r[k] += c * x;
    }
  }
  return r;
}

SparseVec FinDimAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc;
  for (const auto& [i, x] : a.terms)
    for (const auto& [j, y] : b.terms) acc.add(product(static_cast<int>(i), static_cast<int>(j)), x * y);
  return acc.finish();
}

Matrix FinDimAlgebra::left_mult(int i) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [k, x] : product(i, j).terms) m.set(static_cast<int>(k), j, x);
  return m;
}

Matrix FinDimAlgebra::right_mult(int i) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [k, x] : product(j, i).terms) m.set(static_cast<int>(k), j, x);
  return m;
}

Matrix FinDimAlgebra::left_mult(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) m.set_col(j, multiply(a, basis_vec(j)));
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) m.set_col(j, multiply(basis_vec(j), a));
  return m;
}

Matrix FinDimAlgebra::mult_matrix() const {
  Matrix m(field_, dim_, dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, x] : product(i, j).terms) m.set(static_cast<int>(k), i * dim_ + j, x);
  return m;
}

bool operator==(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
}

std::vector<std::string> validate_algebra(const FinDimAlgebra& a) {
  std::vector<std::string> out;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Accumulator l, r;
        for (const auto& [m, x] : a.product(i, j).terms) l.add(a.product(static_cast<int>(m), k), x);
        for (const auto& [m, x] : a.product(j, k).terms) r.add(a.product(i, static_cast<int>(m)), x);
        if (l.finish() != r.finish()) {
          out.push_back("associativity fails on (" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")");
          if (out.size() > 20) return out;
        }
      }
  for (int i = 0; i < n; ++i) {
    Vec e = a.basis_vec(i);
    if (a.multiply(a.unit(), e) != e) out.push_back("unit is not a left identity on " + a.label(i));
    if (a.multiply(e, a.unit()) != e) out.push_back("unit is not a right identity on " + a.label(i));
  }
  return out;
}

FinDimAlgebra opposite(const FinDimAlgebra& a) {
  int n = a.dim();
  std::vector<SparseVec> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = a.product(j, i);
  return FinDimAlgebra(a.field(), a.labels(), std::move(t), a.unit());
}

namespace {

FinDimAlgebra tensor_of(const FinDimAlgebra& a, const FinDimAlgebra& b, bool op_left) {
  int n = a.dim(), m = b.dim(), d = n * m;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) labels.push_back(a.label(i) + "(x)" + b.label(j));
  std::vector<SparseVec> t(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2) {
          const SparseVec& pa = op_left ? a.product(i2, i) : a.product(i, i2);
          const SparseVec& pb = b.product(j, j2);
          Accumulator acc;
          for (const auto& [k, x] : pa.terms)
            for (const auto& [l, y] : pb.terms) acc.add(k * m + l, x * y);
          t[static_cast<std::size_t>(i * m + j) * d + (i2 * m + j2)] = acc.finish();
        }
  Vec unit(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) unit[i * m + j] = a.unit()[i] * b.unit()[j];
  return FinDimAlgebra(a.field(), std::move(labels), std::move(t), std::move(unit));
}

}  // namespace

FinDimAlgebra enveloping(const FinDimAlgebra& a) { return tensor_of(a, a, true); }

FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) { return tensor_of(a, b, false); }

FinDimAlgebra truncated_polynomial(const Field& f, int n, const std::string& var) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i)));
  std::vector<SparseVec> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) t[static_cast<std::size_t>(i) * n + j].terms.emplace_back(i + j, f.one());
  return FinDimAlgebra(f, std::move(labels), std::move(t), unit_vec(f, static_cast<std::size_t>(n), 0));
}

FinDimAlgebra upper_triangular_2(const Field& f) {
  // e11 = 0, e12 = 1, e22 = 2
  std::vector<SparseVec> t(9);
  auto put = [&](int i, int j, int k) { t[static_cast<std::size_t>(i) * 3 + j].terms.emplace_back(k, f.one()); };
  put(0, 0, 0);
  put(0, 1, 1);
  put(1, 2, 1);
  put(2, 2, 2);
  Vec unit{f.one(), f.zero(), f.one()};
  return FinDimAlgebra(f, {"e11", "e12", "e22"}, std::move(t), unit);
}

FinDimAlgebra matrix_algebra(const Field& f, int n) {
  int d = n * n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<SparseVec> t(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) t[static_cast<std::size_t>(i * n + j) * d + (j * n + l)].terms.emplace_back(i * n + l, f.one());
  Vec unit(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) unit[i * n + i] = f.one();
  return FinDimAlgebra(f, std::move(labels), std::move(t), std::move(unit));
}

std::vector<Vec> center(const FinDimAlgebra& a) {
  int n = a.dim();
  // z commutes with every e_i: (L_z - R_z) e_i = 0, linear in z.
  Matrix m(a.field(), n * n, n);
  for (int k = 0; k < n; ++k) {
    Matrix c = a.right_mult(k) - a.left_mult(k);  // columns: z -> z e_k - e_k z
    for (int r = 0; r < n; ++r)
      for (int z = 0; z < n; ++z) m.set(k * n + r, z, c(r, z));
  }
  return kernel_basis(m).basis();
}

std::vector<std::string> validate_bimodule(const BimoduleStructure& b) {
  std::vector<std::string> out;
  const auto& a = b.algebra;
  int n = a.dim();
  if (static_cast<int>(b.left.size()) != n || static_cast<int>(b.right.size()) != n) {
    out.push_back("action families do not match the algebra dimension");
    return out;
  }
  auto combo = [&](const std::vector<Matrix>& fam, const SparseVec& v) {
    Matrix m(a.field(), b.carrier_dim, b.carrier_dim);
    for (const auto& [k, x] : v.terms) m = m + fam[k].scaled(x);
    return m;
  };
  auto combo_dense = [&](const std::vector<Matrix>& fam, const Vec& v) {
    return combo(fam, SparseVec::from_dense(v));
  };
  Matrix id = Matrix::identity(a.field(), b.carrier_dim);
  if (combo_dense(b.left, a.unit()) != id) out.push_back("left action is not unital");
  if (combo_dense(b.right, a.unit()) != id) out.push_back("right action is not unital");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (b.left[i] * b.left[j] != combo(b.left, a.product(i, j)))
        out.push_back("left action not associative on (" + a.label(i) + ", " + a.label(j) + ")");
      if (b.right[j] * b.right[i] != combo(b.right, a.product(i, j)))
        out.push_back("right action not associative on (" + a.label(i) + ", " + a.label(j) + ")");
      if (b.left[i] * b.right[j] != b.right[j] * b.left[i])
        out.push_back("left and right actions do not commute on (" + a.label(i) + ", " + a.label(j) + ")");
    }
  return out;
}

BimoduleStructure regular_bimodule(const FinDimAlgebra& a) {
  BimoduleStructure b{a, a.dim(), {}, {}};
  for (int i = 0; i < a.dim(); ++i) {
    b.left.push_back(a.left_mult(i));
    b.right.push_back(a.right_mult(i));
  }
  return b;
}

}  // namespace smashcoh
