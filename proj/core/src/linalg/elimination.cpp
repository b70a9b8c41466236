#include "smashcoh/linalg/elimination.hpp"

#include <algorithm>
#include <numeric>

namespace smashcoh {

namespace {

// Incremental elimination. Stored rows are reduced against all earlier pivots;
// finalize() back-substitutes and sorts into reduced echelon form.
class Eliminator {
 public:
  Eliminator(const Field& f, int ncols) : field_(f), ncols_(ncols), scratch_(ncols), touched_(ncols, 0) {}

  // Returns true when v was independent of the rows added so far.
  bool add(const SparseVec& v) {
    for (const auto& [j, c] : v.terms) load(static_cast<int>(j), c);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int p = pivots_[r];
      if (!touched_[p] || scratch_[p].is_zero()) continue;
      Scalar c = -scratch_[p];
      for (const auto& [j, x] : rows_[r].terms) load(static_cast<int>(j), c * x);
    }
    SparseVec out;
    for (int j : touched_list_) {
      if (!scratch_[j].is_zero()) out.terms.emplace_back(j, field_.convert(scratch_[j]));
      scratch_[j] = Scalar();
      touched_[j] = 0;
    }
    touched_list_.clear();
    if (out.empty()) return false;
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Scalar inv = out.terms.front().second.inverse();
    for (auto& t : out.terms) t.second *= inv;
    pivots_.push_back(static_cast<int>(out.terms.front().first));
    rows_.push_back(std::move(out));
    return true;
  }

  Echelon finalize() {
    std::vector<int> pivot_row(ncols_, -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) pivot_row[pivots_[r]] = static_cast<int>(r);
    for (std::size_t rr = rows_.size(); rr-- > 0;) {
      bool dirty = false;
      for (std::size_t k = 1; k < rows_[rr].terms.size(); ++k) {
        int j = static_cast<int>(rows_[rr].terms[k].first);
        if (pivot_row[j] > static_cast<int>(rr)) {
          dirty = true;
          break;
        }
      }
      if (!dirty) continue;
      Accumulator acc;
      acc.add(rows_[rr]);
      for (const auto& [j, c] : rows_[rr].terms) {
        int pr = pivot_row[j];
        if (pr > static_cast<int>(rr)) acc.add(rows_[pr], -c);
      }
      rows_[rr] = acc.finish();
      for (auto& t : rows_[rr].terms) t.second = field_.convert(t.second);
    }
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    Echelon e;
    e.ncols = ncols_;
    for (auto r : order) {
      e.rows.push_back(std::move(rows_[r]));
      e.pivots.push_back(pivots_[r]);
    }
    rows_.clear();
    pivots_.clear();
    return e;
  }

 private:
  void load(int j, const Scalar& c) {
    if (!touched_[j]) {
      touched_[j] = 1;
      touched_list_.push_back(j);
    }
    scratch_[j] += c;
  }

  Field field_;
  int ncols_;
  Vec scratch_;
  std::vector<char> touched_;
  std::vector<int> touched_list_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
};

std::vector<SparseVec> dense_rows(const Matrix& m) {
  std::vector<SparseVec> rows(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) rows[i] = SparseVec::from_dense(m.row(i));
  return rows;
}

Subspace kernel_from_echelon(const Field& f, const Echelon& e) {
  int n = e.ncols;
  std::vector<char> is_pivot(n, 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<Accumulator> acc(n);
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) acc[j].add(j, f.one());
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (const auto& [j, c] : e.rows[r].terms)
      if (!is_pivot[j]) acc[j].add(e.pivots[r], -c);
  std::vector<SparseVec> vecs;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) vecs.push_back(acc[j].finish());
  return Subspace::span(f, n, std::move(vecs));
}

}  // namespace

SparseVec Echelon::reduce(const SparseVec& v) const {
  Accumulator acc;
  acc.add(v);
  SparseVec cur = acc.finish();
  // Pivot rows are mutually reduced, so one pass over pivots in order suffices.
  for (std::size_t r = 0; r < rows.size() && !cur.empty(); ++r) {
    Scalar c = cur.at(pivots[r]);
    if (c.is_zero()) continue;
    Accumulator a;
    a.add(cur);
    a.add(rows[r], -c);
    cur = a.finish();
  }
  return cur;
}

Echelon echelon(const Field& f, std::vector<SparseVec> rows, int ncols) {
  Eliminator el(f, ncols);
  for (const auto& r : rows) el.add(r);
  return el.finalize();
}

Subspace::Subspace(const Field& f, int ambient_dim) : field_(f) { ech_.ncols = ambient_dim; }

Subspace Subspace::span(const Field& f, int ambient_dim, const std::vector<Vec>& vectors) {
  std::vector<SparseVec> s;
  s.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim) throw std::invalid_argument("span: length mismatch");
    s.push_back(SparseVec::from_dense(v));
  }
  return span(f, ambient_dim, std::move(s));
}

Subspace Subspace::span(const Field& f, int ambient_dim, std::vector<SparseVec> vectors) {
  Subspace s(f, ambient_dim);
  s.ech_ = echelon(f, std::move(vectors), ambient_dim);
  return s;
}

Subspace Subspace::full(const Field& f, int ambient_dim) {
  std::vector<SparseVec> v(static_cast<std::size_t>(ambient_dim));
  for (int i = 0; i < ambient_dim; ++i) v[i].terms.emplace_back(i, f.one());
  return span(f, ambient_dim, std::move(v));
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<SparseVec> cols(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) cols[j] = SparseVec::from_dense(m.col(j));
  return span(m.field(), m.rows(), std::move(cols));
}

Subspace Subspace::image(const SparseMatrix& m) {
  std::vector<SparseVec> cols(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) cols[j] = m.column(j);
  return span(m.field(), m.rows(), std::move(cols));
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> b;
  for (const auto& r : ech_.rows) b.push_back(r.to_dense(static_cast<std::size_t>(ech_.ncols)));
  return b;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_cols(field_, basis(), ech_.ncols); }

bool Subspace::contains(const Vec& v) const { return ech_.contains(SparseVec::from_dense(v)); }

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.ech_.rows.begin(), o.ech_.rows.end(), [&](const SparseVec& r) { return ech_.contains(r); });
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<SparseVec> rows = ech_.rows;
  rows.insert(rows.end(), o.ech_.rows.begin(), o.ech_.rows.end());
  return span(field_, ech_.ncols, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Kernel of [B_this | -B_o] gives the coefficient pairs of common vectors.
  int a = dim(), b = o.dim(), n = ech_.ncols;
  SparseMatrix m(field_, n, a + b);
  for (int i = 0; i < a; ++i) m.set_column(i, ech_.rows[i]);
  for (int i = 0; i < b; ++i) {
    SparseVec v = o.ech_.rows[i];
    for (auto& t : v.terms) t.second = -t.second;
    m.set_column(a + i, v);
  }
  Subspace k = kernel_basis(m);
  std::vector<SparseVec> vecs;
  for (const auto& kv : k.sparse_basis()) {
    Accumulator acc;
    for (const auto& [j, c] : kv.terms)
      if (j < a) acc.add(ech_.rows[j], c);
    vecs.push_back(acc.finish());
  }
  return span(field_, n, std::move(vecs));
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ech_.ncols == b.ech_.ncols && a.ech_.pivots == b.ech_.pivots && a.ech_.rows == b.ech_.rows;
}

std::pair<Matrix, std::vector<int>> rref(const Matrix& m) {
  Echelon e = echelon(m.field(), dense_rows(m), m.cols());
  Matrix r(m.field(), m.rows(), m.cols());
  for (int i = 0; i < e.rank(); ++i)
    for (const auto& [j, c] : e.rows[i].terms) r.set(i, static_cast<int>(j), c);
  return {r, e.pivots};
}

int rank(const Matrix& m) { return echelon(m.field(), dense_rows(m), m.cols()).rank(); }

int rank(const SparseMatrix& m) {
  // Eliminate along the shorter side.
  if (m.cols() <= m.rows()) {
    std::vector<SparseVec> cols(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) cols[j] = m.column(j);
    return echelon(m.field(), std::move(cols), m.rows()).rank();
  }
  return echelon(m.field(), m.row_vectors(), m.cols()).rank();
}

Subspace kernel_basis(const Matrix& m) {
  return kernel_from_echelon(m.field(), echelon(m.field(), dense_rows(m), m.cols()));
}

Subspace kernel_basis(const SparseMatrix& m) {
  return kernel_from_echelon(m.field(), echelon(m.field(), m.row_vectors(), m.cols()));
}

std::vector<SparseVec> solve(const SparseMatrix& m, const std::vector<SparseVec>& targets) {
  int n = m.cols();
  int t = static_cast<int>(targets.size());
  std::vector<SparseVec> rows = m.row_vectors();
  for (int j = 0; j < t; ++j)
    for (const auto& [i, c] : targets[j].terms) {
      if (i >= m.rows()) throw std::invalid_argument("solve: target length mismatch");
      rows[i].terms.emplace_back(n + j, c);
    }
  Echelon e = echelon(m.field(), std::move(rows), n + t);
  std::vector<char> bad(static_cast<std::size_t>(t), 0);
  std::vector<Accumulator> acc(static_cast<std::size_t>(t));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    int p = e.pivots[r];
    for (const auto& [j, c] : e.rows[r].terms) {
      if (j < n) continue;
      if (p >= n)
        bad[j - n] = 1;
      else
        acc[j - n].add(p, c);
    }
  }
  std::vector<SparseVec> out(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j) {
    if (bad[j]) throw NoSolution("target " + std::to_string(j) + " is not in the image");
    out[j] = acc[j].finish();
  }
  return out;
}

Vec solve(const Matrix& m, const Vec& target) {
  auto x = solve(SparseMatrix::from_dense(m), {SparseVec::from_dense(target)});
  return x[0].to_dense(static_cast<std::size_t>(m.cols()));
}

Matrix solve(const Matrix& m, const Matrix& targets) {
  std::vector<SparseVec> t;
  for (int j = 0; j < targets.cols(); ++j) t.push_back(SparseVec::from_dense(targets.col(j)));
  auto x = solve(SparseMatrix::from_dense(m), t);
  Matrix r(m.field(), m.cols(), targets.cols());
  for (int j = 0; j < targets.cols(); ++j)
    for (const auto& [i, c] : x[j].terms) r.set(static_cast<int>(i), j, c);
  return r;
}

QuotientData quotient_data(const Subspace& ambient, const Subspace& sub) {
  const Field& f = ambient.field();
  int n = ambient.ambient_dim();
  if (sub.ambient_dim() != n) throw NotASubspace("ambient dimensions differ");
  if (!ambient.contains(sub)) throw NotASubspace("sub is not contained in ambient");

  Eliminator el(f, n);
  for (const auto& r : sub.sparse_basis()) el.add(r);
  std::vector<SparseVec> reps;
  for (const auto& r : ambient.sparse_basis())
    if (el.add(r)) reps.push_back(r);

  QuotientData q;
  int k = static_cast<int>(reps.size());
  q.projection = Matrix(f, k, n);
  for (const auto& r : reps) q.representatives.push_back(r.to_dense(static_cast<std::size_t>(n)));
  if (k == 0) return q;

  // N = [reps; sub]; with J its pivot columns, N_J is invertible and
  // coordinates are recovered from v_J.
  std::vector<SparseVec> nrows = reps;
  for (const auto& r : sub.sparse_basis()) nrows.push_back(r);
  int total = static_cast<int>(nrows.size());
  Echelon e = echelon(f, nrows, n);
  const std::vector<int>& J = e.pivots;
  Matrix nj_t(f, total, total);
  for (int i = 0; i < total; ++i)
    for (const auto& [j, c] : nrows[i].terms) {
      auto it = std::lower_bound(J.begin(), J.end(), static_cast<int>(j));
      if (it != J.end() && *it == j) nj_t.set(static_cast<int>(it - J.begin()), i, c);
    }
  Matrix inv = solve(nj_t, Matrix::identity(f, total));
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < total; ++a) q.projection.set(i, J[a], inv(i, a));
  return q;
}

}  // namespace smashcoh
