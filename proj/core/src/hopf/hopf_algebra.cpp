#include "smashcoh/hopf/hopf_algebra.hpp"

#include "smashcoh/linalg/elimination.hpp"

namespace smashcoh {

namespace {

std::vector<SparseVec> columns_of(const Matrix& m) {
  std::vector<SparseVec> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(SparseVec::from_dense(m.col(j)));
  return out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(FinDimAlgebra algebra, std::vector<SparseVec> coproduct, Vec counit, Matrix antipode,
                         std::optional<Matrix> antipode_inverse)
    : alg_(std::move(algebra)), coproduct_(std::move(coproduct)), counit_(std::move(counit)), s_(std::move(antipode)) {
  const int d = alg_.dim();
  const Field& f = alg_.field();
  if (static_cast<int>(coproduct_.size()) != d) throw std::invalid_argument("coproduct must be given on every basis element");
  if (static_cast<int>(counit_.size()) != d) throw std::invalid_argument("counit has wrong length");
  if (s_.rows() != d || s_.cols() != d) throw std::invalid_argument("antipode has wrong shape");
  for (auto& c : counit_) c = f.convert(c);
  for (auto& cp : coproduct_)
    for (auto& t : cp.terms) t.second = f.convert(t.second);
  if (antipode_inverse) {
    sinv_ = *antipode_inverse;
  } else {
    try {
      sinv_ = solve(s_, Matrix::identity(f, d));
    } catch (const NoSolution&) {
      sinv_ = Matrix(f, d, d);
    }
  }
  s_cols_ = columns_of(s_);
  sinv_cols_ = columns_of(sinv_);

  deltas_.resize(kMaxCoproductArity + 1);
  deltas_[1].resize(static_cast<std::size_t>(d));
  for (int g = 0; g < d; ++g) deltas_[1][g].terms.emplace_back(g, f.one());
  deltas_[2] = coproduct_;
  for (int n = 3; n <= kMaxCoproductArity; ++n) {
    deltas_[n].resize(static_cast<std::size_t>(d));
    for (int g = 0; g < d; ++g) {
      Accumulator acc;
      for (const auto& [idx, c] : deltas_[n - 1][g].terms) {
        std::int64_t head = idx / d, last = idx % d;
        for (const auto& [j, x] : coproduct_[static_cast<std::size_t>(last)].terms) acc.add(head * d * d + j, c * x);
      }
      deltas_[n][g] = acc.finish();
    }
  }
}

const SparseVec& HopfAlgebra::delta(int n, int g) const {
  if (n < 1 || n > kMaxCoproductArity) throw std::out_of_range("coproduct arity out of range");
  return deltas_[static_cast<std::size_t>(n)][static_cast<std::size_t>(g)];
}

std::vector<int> HopfAlgebra::split(std::int64_t idx, int n) const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    out[k] = static_cast<int>(idx % dim());
    idx /= dim();
  }
  return out;
}

Matrix HopfAlgebra::coproduct_matrix() const {
  Matrix m(field(), dim() * dim(), dim());
  for (int g = 0; g < dim(); ++g)
    for (const auto& [i, c] : coproduct_[g].terms) m.set(static_cast<int>(i), g, c);
  return m;
}

Matrix HopfAlgebra::counit_matrix() const { return Matrix::from_rows(field(), {counit_}); }

HopfAlgebra group_algebra(const FiniteGroup& g, const Field& f) {
  int n = g.order();
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b].terms.emplace_back(g.mul(a, b), f.one());
  FinDimAlgebra alg(f, g.labels(), std::move(table), unit_vec(f, static_cast<std::size_t>(n), static_cast<std::size_t>(g.identity())));
  std::vector<SparseVec> cop(static_cast<std::size_t>(n));
  Vec eps(static_cast<std::size_t>(n), f.one());
  Matrix s(f, n, n);
  for (int a = 0; a < n; ++a) {
    cop[a].terms.emplace_back(static_cast<std::int64_t>(a) * n + a, f.one());
    s.set(g.inverse(a), a, f.one());
  }
  HopfAlgebra h(std::move(alg), std::move(cop), std::move(eps), s, s);
  h.set_group(g);
  return h;
}

HopfAlgebra sweedler_h4(const Field& f) {
  // basis g^a x^b at index 2b + a: 1, g, x, gx
  auto idx = [](int a, int b) { return 2 * b + a; };
  std::vector<SparseVec> table(16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          int sign = (b * c) % 2 ? -1 : 1;
          table[static_cast<std::size_t>(idx(a, b)) * 4 + idx(c, d)].terms.emplace_back(idx((a + c) % 2, b + d), f.from_int(sign));
        }
  FinDimAlgebra alg(f, {"1", "g", "x", "gx"}, std::move(table), unit_vec(f, 4, 0));
  auto t = [&](int i, int j) { return static_cast<std::int64_t>(i) * 4 + j; };
  std::vector<SparseVec> cop(4);
  cop[0].terms = {{t(0, 0), f.one()}};
  cop[1].terms = {{t(1, 1), f.one()}};
  cop[2].terms = {{t(1, 2), f.one()}, {t(2, 0), f.one()}};
  cop[3].terms = {{t(0, 3), f.one()}, {t(3, 1), f.one()}};
  Vec eps{f.one(), f.one(), f.zero(), f.zero()};
  Matrix s(f, 4, 4), sinv(f, 4, 4);
  s.set(0, 0, f.one());
  s.set(1, 1, f.one());
  s.set(3, 2, f.from_int(-1));  // S(x) = -gx
  s.set(2, 3, f.one());         // S(gx) = x
  sinv.set(0, 0, f.one());
  sinv.set(1, 1, f.one());
  sinv.set(3, 2, f.one());         // S^{-1}(x) = gx
  sinv.set(2, 3, f.from_int(-1));  // S^{-1}(gx) = -x
  HopfAlgebra h(std::move(alg), std::move(cop), std::move(eps), s, sinv);
  h.name = "H4";
  return h;
}

HopfAlgebra trivial_hopf(const Field& f) { return group_algebra(trivial_group(), f); }

std::vector<std::string> validate_hopf(const HopfAlgebra& h) {
  std::vector<std::string> out;
  for (auto& v : validate_algebra(h.algebra())) out.push_back("algebra: " + v);
  const FinDimAlgebra& a = h.algebra();
  const Field& f = h.field();
  int d = h.dim();
  Matrix D = h.coproduct_matrix();
  Matrix E = h.counit_matrix();
  Matrix I = Matrix::identity(f, d);
  if (tensor(D, I) * D != tensor(I, D) * D) out.push_back("coassociativity (D(x)id)D = (id(x)D)D fails");
  // Counit laws: (eps(x)id)D = id = (id(x)eps)D.
  if (tensor(E, I) * D != I) out.push_back("left counit law (eps(x)id)D = id fails");
  if (tensor(I, E) * D != I) out.push_back("right counit law (id(x)eps)D = id fails");
  // Delta and eps are algebra maps.
  FinDimAlgebra aa = tensor_algebra(a, a);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseVec lhs = SparseVec::from_dense(D.apply(a.product(i, j).to_dense(static_cast<std::size_t>(d))));
      if (lhs != aa.multiply(h.coproduct(i), h.coproduct(j)))
        out.push_back("coproduct is not multiplicative on (" + a.label(i) + ", " + a.label(j) + ")");
      Scalar el;
      for (const auto& [k, c] : a.product(i, j).terms) el += c * h.counit()[k];
      if (el != h.counit()[i] * h.counit()[j])
        out.push_back("counit is not multiplicative on (" + a.label(i) + ", " + a.label(j) + ")");
    }
  SparseVec u = SparseVec::from_dense(a.unit());
  if (SparseVec::from_dense(D.apply(a.unit())) != aa.multiply(u, u))
    out.push_back("coproduct does not preserve the unit");
  Scalar eu;
  for (int k = 0; k < d; ++k) eu += a.unit()[k] * h.counit()[k];
  if (eu != f.one()) out.push_back("counit does not preserve the unit");
  // Antipode axiom mu(S(x)id)D = eta eps = mu(id(x)S)D.
  Matrix mu = a.mult_matrix();
  Matrix eta_eps = Matrix::from_cols(f, {a.unit()}) * E;
  if (mu * tensor(h.antipode(), I) * D != eta_eps) out.push_back("antipode axiom mu(S(x)id)D = eta eps fails");
  if (mu * tensor(I, h.antipode()) * D != eta_eps) out.push_back("antipode axiom mu(id(x)S)D = eta eps fails");
  if (h.antipode() * h.antipode_inverse() != I || h.antipode_inverse() * h.antipode() != I)
    out.push_back("antipode is not bijective with the given inverse (S S^-1 = S^-1 S = id fails)");
  return out;
}

int antipode_order(const HopfAlgebra& h, int max_order) {
  Matrix I = Matrix::identity(h.field(), h.dim());
  Matrix p = h.antipode();
  for (int k = 1; k <= max_order; ++k) {
    if (p == I) return k;
    p = p * h.antipode();
  }
  return 0;
}

Matrix twisted_diagonal(const HopfAlgebra& h) {
  int d = h.dim();
  Matrix m(h.field(), d * d, d);
  for (int g = 0; g < d; ++g)
    for (const auto& [idx, c] : h.coproduct(g).terms) {
      int g1 = static_cast<int>(idx / d), g2 = static_cast<int>(idx % d);
      for (const auto& [s, x] : h.S(g1).terms) m.add_to(static_cast<int>(s) * d + g2, g, c * x);
    }
  return m;
}

Matrix iterated_coproduct(const HopfAlgebra& h, int n) {
  if (n < 1) throw std::invalid_argument("iterated_coproduct needs n >= 1");
  int d = h.dim();
  if (n <= HopfAlgebra::kMaxCoproductArity) {
    std::int64_t rows = 1;
    for (int k = 0; k < n; ++k) rows *= d;
    Matrix m(h.field(), static_cast<int>(rows), d);
    for (int g = 0; g < d; ++g)
      for (const auto& [i, c] : h.delta(n, g).terms) m.set(static_cast<int>(i), g, c);
    return m;
  }
  Matrix prev = iterated_coproduct(h, n - 1);
  Matrix left = Matrix::identity(h.field(), prev.rows() / d);
  return tensor(left, h.coproduct_matrix()) * prev;
}

}  // namespace smashcoh
