#include "smashcoh/complexes/double_complex.hpp"

namespace smashcoh {

DoubleComplex::DoubleComplex(Field f, int n, std::vector<std::vector<std::int64_t>> slot_dims)
    : field(f), N(n), dims(std::move(slot_dims)) {
  dh.resize(static_cast<std::size_t>(N) + 1);
  dv.resize(static_cast<std::size_t>(N) + 1);
  for (int p = 0; p <= N; ++p) {
    for (int q = 0; p + q <= N; ++q) {
      int rows_h = p + q < N ? static_cast<int>(dim(p + 1, q)) : 0;
      int rows_v = p + q < N ? static_cast<int>(dim(p, q + 1)) : 0;
      dh[p].emplace_back(f, rows_h, static_cast<int>(dim(p, q)));
      dv[p].emplace_back(f, rows_v, static_cast<int>(dim(p, q)));
    }
  }
}

std::int64_t DoubleComplex::dim(int p, int q) const {
  if (p < 0 || q < 0 || p + q > N) return 0;
  return dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

TotalComplex::TotalComplex(DoubleComplex dc) : dc_(std::move(dc)) {
  const Field& f = dc_.field;
  int N = dc_.N;
  for (int p = 0; p <= N; ++p)
    for (int q = 0; p + q < N; ++q) {
      if (p + q + 2 > N) continue;
      const SparseMatrix& h1 = dc_.dh[p][q];
      const SparseMatrix& v1 = dc_.dv[p][q];
      if (dc_.dv[p + 1][q] * h1 != dc_.dh[p][q + 1] * v1)
        throw SquareCheckFailed("square at (" + std::to_string(p) + "," + std::to_string(q) + ") does not commute");
      if (!(dc_.dh[p + 1][q] * h1).is_zero())
        throw SquareCheckFailed("horizontal d^2 != 0 at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      if (!(dc_.dv[p][q + 1] * v1).is_zero())
        throw SquareCheckFailed("vertical d^2 != 0 at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  std::vector<std::int64_t> tot_dims;
  offsets_.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    std::int64_t total = 0;
    for (int p = 0; p <= n; ++p) {
      offsets_[n].push_back(total);
      total += dc_.dim(p, n - p);
    }
    offsets_[n].push_back(total);
    tot_dims.push_back(total);
  }
  tot_ = ModuleComplex(f, 0, tot_dims, 1);
  tot_.trusted_hi = N - 1;
  for (int n = 0; n < N; ++n) {
    SparseMatrix D(f, static_cast<int>(tot_dims[n + 1]), static_cast<int>(tot_dims[n]));
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      const SparseMatrix& h = dc_.dh[p][q];
      const SparseMatrix& v = dc_.dv[p][q];
      bool odd = p % 2 != 0;
      for (int c = 0; c < static_cast<int>(dc_.dim(p, q)); ++c) {
        Accumulator acc;
        for (const auto& [r, x] : h.column(c).terms) acc.add(offset(n + 1, p + 1) + r, x);
        for (const auto& [r, x] : v.column(c).terms) acc.add(offset(n + 1, p) + r, odd ? -x : x);
        D.set_column(static_cast<int>(offset(n, p) + c), acc.finish());
      }
    }
    tot_.set_differential(n, std::move(D));
  }
  for (int n = 0; n + 2 <= N; ++n)
    if (!(tot_.d(n + 1) * tot_.d(n)).is_zero()) throw SquareCheckFailed("total differential squares to nonzero");
}

int TotalComplex::level(int n, std::int64_t idx, Filtration which) const {
  const auto& o = offsets_[static_cast<std::size_t>(n)];
  int p = 0;
  while (p + 1 < static_cast<int>(o.size()) && o[static_cast<std::size_t>(p) + 1] <= idx) ++p;
  return which == Filtration::column ? p : n - p;
}

Subspace TotalComplex::filtration(int n, Filtration which, int s) const {
  const Field& f = dc_.field;
  int dim = tot_.dim(n);
  std::vector<SparseVec> basis;
  for (int p = 0; p <= n; ++p) {
    int lev = which == Filtration::column ? p : n - p;
    if (lev < s) continue;
    for (std::int64_t i = offset(n, p); i < offset(n, p + 1); ++i) basis.push_back(SparseVec{{{i, f.one()}}});
  }
  return Subspace::span(f, dim, std::move(basis));
}

Vec TotalComplex::block(int n, int p, const Vec& x) const {
  return Vec(x.begin() + offset(n, p), x.begin() + offset(n, p + 1));
}

void TotalComplex::add_block(int n, int p, Vec& x, const Vec& blk) const {
  std::int64_t o = offset(n, p);
  for (std::size_t i = 0; i < blk.size(); ++i)
    if (!blk[i].is_zero()) x[static_cast<std::size_t>(o) + i] += blk[i];
}

std::vector<int> graded_cohomology_dims(const TotalComplex& t, int n, Filtration which) {
  const ModuleComplex& c = t.complex();
  Homology h = homology(c, n);
  std::vector<int> out;
  int prev = -1;
  for (int s = n + 1; s >= 0; --s) {
    Subspace zs = h.cycles.intersect(t.filtration(n, which, s)).sum(h.boundaries);
    int dim = zs.dim() - h.boundaries.dim();
    if (s <= n) out.insert(out.begin(), dim - prev);
    prev = dim;
  }
  return out;
}

}  // namespace smashcoh
