#include "smashcoh/hochschild/cochains.hpp"

namespace smashcoh {

namespace {

SparseVec column_sparse(const Matrix& m, int c) { return SparseVec::from_dense(m.col(c)); }

SparseVec basis_sparse(int i) { return SparseVec{{{i, Scalar(1)}}}; }

SparseVec combine(const std::vector<SparseVec>& images, const SparseVec& v) {
  Accumulator acc;
  for (const auto& [i, c] : v.terms) acc.add(images[static_cast<std::size_t>(i)], c);
  return acc.finish();
}

void add_shifted(Accumulator& acc, std::int64_t offset, const SparseVec& v, const Scalar& c) {
  for (const auto& [i, x] : v.terms) acc.add(offset + i, c * x);
}

Scalar sign(int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

SparseVec slice(const Vec& v, std::int64_t offset, std::int64_t len) {
  SparseVec out;
  for (std::int64_t i = 0; i < len; ++i) {
    const Scalar& x = v[static_cast<std::size_t>(offset + i)];
    if (!x.is_zero()) out.terms.emplace_back(i, x);
  }
  return out;
}

AlgebraExtension identity_extension(const FinDimAlgebra& r) {
  return {r, r, Matrix::identity(r.field(), r.dim())};
}

AlgebraExtension character_extension(const FinDimAlgebra& r, const Vec& eps) {
  const Field& f = r.field();
  FinDimAlgebra k(f, {"1"}, {SparseVec{{{0, f.one()}}}}, Vec{f.one()});
  return {r, k, Matrix::from_rows(f, {eps}, r.dim())};
}

std::vector<std::string> validate_extension(const AlgebraExtension& e) {
  std::vector<std::string> out;
  const FinDimAlgebra& r = e.source;
  const FinDimAlgebra& b = e.target;
  if (e.map.rows() != b.dim() || e.map.cols() != r.dim()) return {"structure map has the wrong shape"};
  if (e.map.apply(r.unit()) != b.unit()) out.push_back("structure map is not unital");
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) {
      Vec lhs = e.map.apply(r.product(i, j).to_dense(static_cast<std::size_t>(r.dim())));
      Vec rhs = b.multiply(e.map.col(i), e.map.col(j));
      if (lhs != rhs) out.push_back("structure map is not multiplicative on (" + r.label(i) + ", " + r.label(j) + ")");
    }
  return out;
}

Coefficients smash_coefficients(const ModuleAlgebraAction& act, const AlgebraExtension& ext) {
  if (!(ext.source == smash_product(act)))
    throw std::invalid_argument("extension source is not the smash product of the action");
  return {ext.target, ext.map * smash_inclusion_A(act), ext.map * smash_inclusion_Gamma(act), act.hopf};
}

Coefficients plain_coefficients(const AlgebraExtension& ext) {
  return {ext.target, ext.map, Matrix(ext.target.field(), ext.target.dim(), 0), std::nullopt};
}

HomAeAlgebra::HomAeAlgebra(const FreeBimoduleResolution& k, Coefficients c, int top)
    : k_(&k), c_(std::move(c)), top_(top) {
  if (top > k.length()) throw std::invalid_argument("HomAeAlgebra: resolution is shorter than the requested top");
  const Field& f = k.algebra.field();
  const FinDimAlgebra& b = c_.algebra;
  int db = b.dim();
  for (int a = 0; a < k.adim(); ++a) sa_.push_back(column_sparse(c_.from_a, a));
  for (int g = 0; g < c_.from_gamma.cols(); ++g) sg_.push_back(column_sparse(c_.from_gamma, g));

  std::vector<std::int64_t> dims;
  for (int q = 0; q <= top; ++q) dims.push_back(k.base_dim(q) * db);
  complex_ = ModuleComplex(f, 0, dims, 1);
  complex_.trusted_hi = top - 1;
  for (int q = 0; q < top; ++q) {
    std::vector<Accumulator> cols(static_cast<std::size_t>(dims[q]));
    Scalar s = -sign(q);
    for (std::int64_t m2 = 0; m2 < k.base_dim(q + 1); ++m2)
      for (const auto& t : k.boundary[q + 1][m2])
        for (int e = 0; e < db; ++e) {
          SparseVec v = b.multiply(b.multiply(sa_[t.left], basis_sparse(e)), sa_[t.right]);
          add_shifted(cols[static_cast<std::size_t>(t.base * db + e)], m2 * db, v, s * t.coef);
        }
    SparseMatrix d(f, static_cast<int>(dims[q + 1]), static_cast<int>(dims[q]));
    for (std::size_t i = 0; i < cols.size(); ++i) d.set_column(static_cast<int>(i), cols[i].finish());
    complex_.set_differential(q, std::move(d));
  }

  if (!c_.hopf || sg_.empty()) return;
  const HopfAlgebra& h = *c_.hopf;
  if (k.gamma.empty()) throw std::invalid_argument("HomAeAlgebra: resolution carries no Gamma-action");
  ActionFamily fam{"right:Gamma", {}};
  for (int q = 0; q <= top; ++q) {
    action_.emplace_back();
    for (int g = 0; g < h.dim(); ++g) {
      std::vector<Accumulator> cols(static_cast<std::size_t>(dims[q]));
      for (const auto& [idx, c3] : h.delta(3, g).terms) {
        std::vector<int> gs = h.split(idx, 3);
        SparseVec left = combine(sg_, h.S(gs[0]));
        const SparseVec& right = sg_[static_cast<std::size_t>(gs[2])];
        std::vector<SparseVec> sand;
        for (int e = 0; e < db; ++e) sand.push_back(b.multiply(b.multiply(left, basis_sparse(e)), right));
        const SparseMatrix& act = k.gamma[q][gs[1]];
        for (std::int64_t m2 = 0; m2 < k.base_dim(q); ++m2)
          for (const auto& [m, cm] : act.column(static_cast<int>(m2)).terms)
            for (int e = 0; e < db; ++e) add_shifted(cols[static_cast<std::size_t>(m * db + e)], m2 * db, sand[e], c3 * cm);
      }
      SparseMatrix r(f, static_cast<int>(dims[q]), static_cast<int>(dims[q]));
      for (std::size_t i = 0; i < cols.size(); ++i) r.set_column(static_cast<int>(i), cols[i].finish());
      action_[q].push_back(std::move(r));
    }
    fam.ops.push_back(action_[q]);
  }
  complex_.add_family(std::move(fam));
}

const HopfAlgebra& HomAeAlgebra::hopf() const {
  if (!c_.hopf) throw std::logic_error("HomAeAlgebra: no Hopf algebra attached");
  return *c_.hopf;
}

const SparseMatrix& HomAeAlgebra::right_action(int q, int g) const {
  if (action_.empty()) throw std::logic_error("HomAeAlgebra: no Gamma-action attached");
  return action_[static_cast<std::size_t>(q)][static_cast<std::size_t>(g)];
}

Vec HomAeAlgebra::product(int n1, const Vec& x, int n2, const Vec& y) const {
  int n = n1 + n2;
  if (n > top_) throw std::out_of_range("HomAeAlgebra::product beyond top");
  const FinDimAlgebra& b = c_.algebra;
  int db = b.dim();
  Vec out(static_cast<std::size_t>(k_->base_dim(n) * db));
  if (is_zero(x) || is_zero(y)) return out;
  Scalar s = sign(n1 * n2);
  for (std::int64_t m = 0; m < k_->base_dim(n); ++m) {
    Accumulator acc;
    for (const auto& t : k_->diagonal[n][m]) {
      if (t.split != n1) continue;
      SparseVec fx = slice(x, t.first * db, db);
      if (fx.empty()) continue;
      SparseVec gy = slice(y, t.second * db, db);
      if (gy.empty()) continue;
      SparseVec v = b.multiply(sa_[t.left], fx);
      v = b.multiply(v, sa_[t.middle]);
      v = b.multiply(v, gy);
      v = b.multiply(v, sa_[t.right]);
      acc.add(v, s * t.coef);
    }
    for (const auto& [e, c] : acc.finish().terms) out[static_cast<std::size_t>(m * db + e)] = c;
  }
  return out;
}

SparseVec HomAeAlgebra::evaluate(int q, const Vec& f, std::int64_t full) const {
  int a, a2;
  std::int64_t m;
  k_->full_decode(q, full, a, m, a2);
  const FinDimAlgebra& b = c_.algebra;
  return b.multiply(b.multiply(sa_[a], slice(f, m * bdim(), bdim())), sa_[a2]);
}

Vec HomAeAlgebra::from_full(int q, const Vec& full) const {
  const FinDimAlgebra& b = c_.algebra;
  int db = b.dim();
  auto value = [&](const SparseVec& x) {
    Accumulator acc;
    for (const auto& [i, c] : x.terms) acc.add(slice(full, i * db, db), c);
    return acc.finish();
  };
  for (std::int64_t x = 0; x < k_->full_dim(q); ++x) {
    SparseVec fx = slice(full, x * db, db);
    for (int a = 0; a < k_->adim(); ++a) {
      SparseVec ex{{{x, Scalar(1)}}};
      if (value(k_->act_full(q, ex, a, -1)) != b.multiply(sa_[a], fx) ||
          value(k_->act_full(q, ex, -1, a)) != b.multiply(fx, sa_[a]))
        throw NotLinear("cochain of degree " + std::to_string(q) + " is not A^e-linear at basis element " +
                        std::to_string(x));
    }
  }
  int u = k_->algebra.unit_index();
  Vec out(static_cast<std::size_t>(k_->base_dim(q) * db));
  for (std::int64_t m = 0; m < k_->base_dim(q); ++m)
    for (const auto& [e, c] : slice(full, k_->full_index(q, u, m, u) * db, db).terms)
      out[static_cast<std::size_t>(m * db + e)] = c;
  return out;
}

SmashCochains::SmashCochains(const SmashComplex& x, const SmashDiagonal* diag, AlgebraExtension ext)
    : x_(&x), diag_(diag), ext_(std::move(ext)) {
  if (!(ext_.source == x.smash())) throw std::invalid_argument("SmashCochains: extension of a different algebra");
  const Field& f = x.smash().field();
  const FinDimAlgebra& b = ext_.target;
  int db = b.dim();
  for (int r = 0; r < x.rdim(); ++r) sr_.push_back(column_sparse(ext_.map, r));
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= x.top(); ++n) dims.push_back(x.base_dim(n) * db);
  complex_ = ModuleComplex(f, 0, dims, 1);
  complex_.trusted_hi = x.top() - 1;
  for (int n = 0; n < x.top(); ++n) {
    std::vector<Accumulator> cols(static_cast<std::size_t>(dims[n]));
    Scalar s = -sign(n);
    for (std::int64_t v = 0; v < x.base_dim(n + 1); ++v)
      for (const auto& [idx, c] : x.boundary(n + 1, v).terms) {
        int r, r2;
        std::int64_t w;
        x.free_decode(n, idx, r, w, r2);
        for (int e = 0; e < db; ++e)
          add_shifted(cols[static_cast<std::size_t>(w * db + e)], v * db, sandwich(r, basis_sparse(e), r2), s * c);
      }
    SparseMatrix d(f, static_cast<int>(dims[n + 1]), static_cast<int>(dims[n]));
    for (std::size_t i = 0; i < cols.size(); ++i) d.set_column(static_cast<int>(i), cols[i].finish());
    complex_.set_differential(n, std::move(d));
  }
}

SparseVec SmashCochains::sandwich(int r, const SparseVec& b, int r2) const {
  const FinDimAlgebra& alg = ext_.target;
  return alg.multiply(alg.multiply(sr_[static_cast<std::size_t>(r)], b), sr_[static_cast<std::size_t>(r2)]);
}

Vec SmashCochains::product(int n1, const Vec& x, int n2, const Vec& y) const {
  if (!diag_) throw std::logic_error("SmashCochains: no diagonal attached");
  int n = n1 + n2;
  if (n > diag_->top()) throw std::out_of_range("SmashCochains::product beyond the diagonal's top");
  const FinDimAlgebra& b = ext_.target;
  int db = b.dim();
  Vec out(static_cast<std::size_t>(x_->base_dim(n) * db));
  if (is_zero(x) || is_zero(y)) return out;
  Scalar s = sign(n1 * n2);
  const SlotLayout& lay = diag_->square().layout(n);
  for (std::int64_t v = 0; v < x_->base_dim(n); ++v) {
    Accumulator acc;
    for (const auto& [w, c] : diag_->image(n, v).terms) {
      auto [slot, dg] = lay.decode(w);
      if (slot != n1) continue;
      SparseVec fx = slice(x, dg[1] * db, db);
      if (fx.empty()) continue;
      SparseVec gy = slice(y, dg[3] * db, db);
      if (gy.empty()) continue;
      SparseVec t = b.multiply(sr_[dg[0]], fx);
      t = b.multiply(t, sr_[dg[2]]);
      t = b.multiply(t, gy);
      t = b.multiply(t, sr_[dg[4]]);
      acc.add(t, s * c);
    }
    for (const auto& [e, c] : acc.finish().terms) out[static_cast<std::size_t>(v * db + e)] = c;
  }
  return out;
}

Vec SmashCochains::from_full(int n, const Vec& full) const {
  const FinDimAlgebra& b = ext_.target;
  int db = b.dim();
  auto value = [&](const SparseVec& x) {
    Accumulator acc;
    for (const auto& [i, c] : x.terms) acc.add(slice(full, i * db, db), c);
    return acc.finish();
  };
  for (std::int64_t x = 0; x < x_->full_dim(n); ++x) {
    SparseVec ex{{{x, Scalar(1)}}};
    SparseVec fx = value(ex);
    for (int r = 0; r < x_->rdim(); ++r)
      if (value(x_->left_R(n, ex, r)) != b.multiply(sr_[r], fx) || value(x_->right_R(n, ex, r)) != b.multiply(fx, sr_[r]))
        throw NotLinear("cochain of degree " + std::to_string(n) + " is not R^e-linear at basis element " +
                        std::to_string(x));
  }
  Vec out(static_cast<std::size_t>(x_->base_dim(n) * db));
  for (std::int64_t v = 0; v < x_->base_dim(n); ++v)
    for (const auto& [e, c] : slice(full, x_->generator_full(n, v) * db, db).terms)
      out[static_cast<std::size_t>(v * db + e)] = c;
  return out;
}

}  // namespace smashcoh
