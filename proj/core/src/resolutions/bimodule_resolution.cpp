#include "smashcoh/resolutions/bimodule_resolution.hpp"

#include <stdexcept>

namespace smashcoh {

namespace {

SparseMatrix sparse_kron(const SparseMatrix& x, const SparseMatrix& y) {
  SparseMatrix out(x.field(), x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.cols(); ++i)
    for (int j = 0; j < y.cols(); ++j) {
      SparseVec col;
      for (const auto& [r1, c1] : x.column(i).terms)
        for (const auto& [r2, c2] : y.column(j).terms) col.terms.emplace_back(r1 * y.rows() + r2, c1 * c2);
      out.set_column(i * y.cols() + j, std::move(col));
    }
  return out;
}

std::vector<std::vector<SparseVec>> action_columns(const ModuleAlgebraAction& act) {
  std::vector<std::vector<SparseVec>> cols(static_cast<std::size_t>(act.hopf.dim()));
  for (int g = 0; g < act.hopf.dim(); ++g)
    for (int a = 0; a < act.algebra.dim(); ++a) cols[g].push_back(act.apply(g, a));
  return cols;
}

SparseVec basis_sparse(const Field& f, int i) { return SparseVec{{{i, f.one()}}}; }

SparseVec left_product(const FinDimAlgebra& alg, int l, int a) {
  return l < 0 ? basis_sparse(alg.field(), a) : alg.product(l, a);
}

SparseVec right_product(const FinDimAlgebra& alg, int a, int r) {
  return r < 0 ? basis_sparse(alg.field(), a) : alg.product(a, r);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::int64_t FreeBimoduleResolution::base_dim(int q) const {
  if (q < 0 || q > length()) return 0;
  return base_dims[static_cast<std::size_t>(q)];
}

std::int64_t FreeBimoduleResolution::full_dim(int q) const {
  return static_cast<std::int64_t>(adim()) * adim() * base_dim(q);
}

std::int64_t FreeBimoduleResolution::full_index(int q, int a, std::int64_t m, int a2) const {
  return (a * base_dim(q) + m) * adim() + a2;
}

void FreeBimoduleResolution::full_decode(int q, std::int64_t x, int& a, std::int64_t& m, int& a2) const {
  a2 = static_cast<int>(x % adim());
  x /= adim();
  m = x % base_dim(q);
  a = static_cast<int>(x / base_dim(q));
}

SparseVec FreeBimoduleResolution::differential_full(int q, std::int64_t x) const {
  int a, a2;
  std::int64_t m;
  full_decode(q, x, a, m, a2);
  Accumulator acc;
  for (const auto& t : boundary[static_cast<std::size_t>(q)][static_cast<std::size_t>(m)]) {
    SparseVec l = algebra.product(a, t.left);
    SparseVec r = algebra.product(t.right, a2);
    for (const auto& [i, ci] : l.terms)
      for (const auto& [j, cj] : r.terms)
        acc.add(full_index(q - 1, static_cast<int>(i), t.base, static_cast<int>(j)), t.coef * ci * cj);
  }
  return acc.finish();
}

SparseVec FreeBimoduleResolution::augmentation_full(std::int64_t x) const {
  int a, a2;
  std::int64_t m;
  full_decode(0, x, a, m, a2);
  SparseVec l = algebra.multiply(basis_sparse(algebra.field(), a), augmentation[static_cast<std::size_t>(m)]);
  return algebra.multiply(l, basis_sparse(algebra.field(), a2));
}

SparseVec FreeBimoduleResolution::gamma_full(int q, int g, std::int64_t x) const {
  if (!action) throw std::logic_error("gamma_full: resolution carries no action");
  const HopfAlgebra& h = action->hopf;
  int a, a2;
  std::int64_t m;
  full_decode(q, x, a, m, a2);
  Accumulator acc;
  for (const auto& [idx, c] : h.delta(3, g).terms) {
    auto gs = h.split(idx, 3);
    const SparseVec& va = act_cols[gs[0]][a];
    const SparseVec& vm = gamma[static_cast<std::size_t>(q)][gs[1]].column(static_cast<int>(m));
    const SparseVec& vb = act_cols[gs[2]][a2];
    for (const auto& [i, ci] : va.terms)
      for (const auto& [j, cj] : vm.terms)
        for (const auto& [k, ck] : vb.terms)
          acc.add(full_index(q, static_cast<int>(i), j, static_cast<int>(k)), c * ci * cj * ck);
  }
  return acc.finish();
}

SparseVec FreeBimoduleResolution::act_full(int q, const SparseVec& v, int l, int r) const {
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    int a, a2;
    std::int64_t m;
    full_decode(q, x, a, m, a2);
    SparseVec lv = left_product(algebra, l, a);
    SparseVec rv = right_product(algebra, a2, r);
    for (const auto& [i, ci] : lv.terms)
      for (const auto& [j, cj] : rv.terms)
        acc.add(full_index(q, static_cast<int>(i), m, static_cast<int>(j)), c * ci * cj);
  }
  return acc.finish();
}

FreeSource FreeBimoduleResolution::free_source() const {
  FreeSource s;
  s.base_dims = base_dims;
  int u = algebra.unit_index();
  s.boundary = [this, u](int n, std::int64_t b) {
    std::vector<FreeTerm> out;
    for (const auto& t : boundary[static_cast<std::size_t>(n)][static_cast<std::size_t>(b)])
      out.push_back(FreeTerm{t.base, t.left == u ? -1 : t.left, t.right == u ? -1 : t.right, t.coef});
    return out;
  };
  return s;
}

LiftTarget FreeBimoduleResolution::lift_target() const {
  LiftTarget t;
  t.d = [this](int n) {
    SparseMatrix d(algebra.field(), static_cast<int>(full_dim(n - 1)), static_cast<int>(full_dim(n)));
    for (std::int64_t x = 0; x < full_dim(n); ++x) d.set_column(static_cast<int>(x), differential_full(n, x));
    return d;
  };
  t.act = [this](int n, const SparseVec& v, int l, int r) { return act_full(n, v, l, r); };
  return t;
}

FreeBimoduleResolution bar_resolution(const FinDimAlgebra& a, const std::optional<ModuleAlgebraAction>& act, int length,
                                      bool normalized) {
  if (length < 0) throw std::invalid_argument("bar_resolution: negative length");
  int u = a.unit_index();
  if (u < 0) throw std::invalid_argument("bar_resolution: the unit must be a basis vector");
  if (act && !(act->algebra == a)) throw std::invalid_argument("bar_resolution: action is on a different algebra");
  const Field& f = a.field();
  FreeBimoduleResolution k;
  k.name = normalized ? "normalized bar" : "bar";
  k.algebra = a;
  k.action = act;
  std::vector<int> letters, pos(static_cast<std::size_t>(a.dim()), -1);
  for (int i = 0; i < a.dim(); ++i)
    if (!normalized || i != u) {
      pos[i] = static_cast<int>(letters.size());
      letters.push_back(i);
    }
  const std::int64_t nl = static_cast<std::int64_t>(letters.size());
  for (int q = 0; q <= length; ++q) k.base_dims.push_back(ipow(nl, q));
  auto digits_of = [&](int q, std::int64_t m) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(q));
    for (int i = q; i-- > 0;) {
      w[i] = m % nl;
      m /= nl;
    }
    return w;
  };
  auto index_of = [&](const std::vector<std::int64_t>& w, std::size_t from, std::size_t to) {
    std::int64_t m = 0;
    for (std::size_t i = from; i < to; ++i) m = m * nl + w[i];
    return m;
  };

  k.boundary.resize(static_cast<std::size_t>(length) + 1);
  for (int q = 1; q <= length; ++q) {
    k.boundary[q].resize(static_cast<std::size_t>(k.base_dims[q]));
    for (std::int64_t m = 0; m < k.base_dims[q]; ++m) {
      auto w = digits_of(q, m);
      auto& terms = k.boundary[q][m];
      terms.push_back({letters[w[0]], index_of(w, 1, w.size()), u, f.one()});
      for (int i = 1; i < q; ++i) {
        Scalar sign = i % 2 == 0 ? f.one() : -f.one();
        for (const auto& [prod, c] : a.product(letters[w[i - 1]], letters[w[i]]).terms) {
          if (pos[prod] < 0) continue;
          std::vector<std::int64_t> w2;
          for (int j = 0; j < q; ++j) {
            if (j == i) continue;
            w2.push_back(j == i - 1 ? pos[prod] : w[j]);
          }
          terms.push_back({u, index_of(w2, 0, w2.size()), u, sign * c});
        }
      }
      terms.push_back({u, index_of(w, 0, w.size() - 1), letters[w.back()], q % 2 == 0 ? f.one() : -f.one()});
    }
  }
  k.augmentation.push_back(basis_sparse(f, u));

  k.diagonal.resize(static_cast<std::size_t>(length) + 1);
  for (int q = 0; q <= length; ++q) {
    k.diagonal[q].resize(static_cast<std::size_t>(k.base_dims[q]));
    for (std::int64_t m = 0; m < k.base_dims[q]; ++m) {
      auto w = digits_of(q, m);
      for (int i = 0; i <= q; ++i)
        k.diagonal[q][m].push_back({u, i, index_of(w, 0, static_cast<std::size_t>(i)), u,
                                    index_of(w, static_cast<std::size_t>(i), w.size()), u, f.one()});
    }
  }

  if (act) {
    k.act_cols = action_columns(*act);
    const HopfAlgebra& h = act->hopf;
    std::vector<SparseMatrix> letter_act;
    for (int g = 0; g < h.dim(); ++g) {
      SparseMatrix m(f, static_cast<int>(nl), static_cast<int>(nl));
      for (std::int64_t j = 0; j < nl; ++j) {
        SparseVec col;
        for (const auto& [i, c] : k.act_cols[g][letters[j]].terms)
          if (pos[i] >= 0) col.terms.emplace_back(pos[i], c);
        m.set_column(static_cast<int>(j), std::move(col));
      }
      letter_act.push_back(std::move(m));
    }
    k.gamma.resize(static_cast<std::size_t>(length) + 1);
    for (int g = 0; g < h.dim(); ++g) {
      SparseMatrix e(f, 1, 1);
      if (!h.counit()[g].is_zero()) e.set_column(0, SparseVec{{{0, h.counit()[g]}}});
      k.gamma[0].push_back(std::move(e));
    }
    for (int q = 1; q <= length; ++q)
      for (int g = 0; g < h.dim(); ++g) {
        SparseMatrix sum(f, static_cast<int>(k.base_dims[q]), static_cast<int>(k.base_dims[q]));
        for (const auto& [idx, c] : h.coproduct(g).terms) {
          auto gs = h.split(idx, 2);
          sum = sum + sparse_kron(letter_act[gs[0]], k.gamma[q - 1][gs[1]]).scaled(c);
        }
        k.gamma[q].push_back(std::move(sum));
      }
  }
  return k;
}

ModuleComplex bimodule_complex(const FreeBimoduleResolution& k, bool augmented) {
  const Field& f = k.algebra.field();
  int lo = augmented ? -1 : 0;
  std::vector<std::int64_t> dims;
  if (augmented) dims.push_back(k.adim());
  for (int q = 0; q <= k.length(); ++q) dims.push_back(k.full_dim(q));
  ModuleComplex c(f, lo, dims, -1);
  for (int q = 0; q <= k.length(); ++q) {
    if (q == 0 && !augmented) continue;
    int rows = static_cast<int>(q == 0 ? k.adim() : k.full_dim(q - 1));
    SparseMatrix d(f, rows, static_cast<int>(k.full_dim(q)));
    for (std::int64_t x = 0; x < k.full_dim(q); ++x)
      d.set_column(static_cast<int>(x), q == 0 ? k.augmentation_full(x) : k.differential_full(q, x));
    c.set_differential(q, std::move(d));
  }
  auto family = [&](const std::string& name, int count, auto&& op) {
    ActionFamily fam{name, {}};
    for (int n = lo; n <= k.length(); ++n) {
      std::vector<SparseMatrix> ops;
      int dim = c.dim(n);
      for (int e = 0; e < count; ++e) {
        SparseMatrix m(f, dim, dim);
        for (int x = 0; x < dim; ++x) m.set_column(x, op(n, e, x));
        ops.push_back(std::move(m));
      }
      fam.ops.push_back(std::move(ops));
    }
    c.add_family(std::move(fam));
  };
  const FinDimAlgebra& a = k.algebra;
  family("left:A", a.dim(), [&](int n, int e, int x) {
    return n < 0 ? a.product(e, x) : k.act_full(n, basis_sparse(f, x), e, -1);
  });
  family("right:A", a.dim(), [&](int n, int e, int x) {
    return n < 0 ? a.product(x, e) : k.act_full(n, basis_sparse(f, x), -1, e);
  });
  if (k.action)
    family("gamma", k.action->hopf.dim(), [&](int n, int g, int x) {
      return n < 0 ? k.act_cols[g][x] : k.gamma_full(n, g, x);
    });
  c.trusted_hi = k.length() - 1;
  return c;
}

DiagonalTarget::DiagonalTarget(const FreeBimoduleResolution& k, int top) : k_(&k), top_(top) {
  if (top > k.length()) throw std::invalid_argument("DiagonalTarget: resolution too short");
  std::int64_t a = k.adim();
  for (int n = 0; n <= top; ++n) {
    SlotLayout l;
    for (int i = 0; i <= n; ++i) l.add_slot({a, k.base_dim(i), a, k.base_dim(n - i), a});
    layouts_.push_back(std::move(l));
  }
}

SparseVec DiagonalTarget::differential_full(int n, std::int64_t x) const {
  const FreeBimoduleResolution& k = *k_;
  const FinDimAlgebra& alg = k.algebra;
  auto [i, d] = layout(n).decode(x);
  int a = static_cast<int>(d[0]), s = static_cast<int>(d[2]), a2 = static_cast<int>(d[4]);
  std::int64_t m1 = d[1], m2 = d[3];
  Accumulator acc;
  if (i >= 1)
    for (const auto& t : k.boundary[i][m1]) {
      SparseVec l = alg.product(a, t.left), r = alg.product(t.right, s);
      for (const auto& [p, cp] : l.terms)
        for (const auto& [q, cq] : r.terms) acc.add(layout(n - 1).encode(i - 1, {p, t.base, q, m2, a2}), t.coef * cp * cq);
    }
  if (n - i >= 1) {
    Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (const auto& t : k.boundary[n - i][m2]) {
      SparseVec l = alg.product(s, t.left), r = alg.product(t.right, a2);
      for (const auto& [p, cp] : l.terms)
        for (const auto& [q, cq] : r.terms)
          acc.add(layout(n - 1).encode(i, {a, m1, p, t.base, q}), sign * t.coef * cp * cq);
    }
  }
  return acc.finish();
}

SparseMatrix DiagonalTarget::differential(int n) const {
  SparseMatrix d(k_->algebra.field(), static_cast<int>(dim(n - 1)), static_cast<int>(dim(n)));
  for (std::int64_t x = 0; x < dim(n); ++x) d.set_column(static_cast<int>(x), differential_full(n, x));
  return d;
}

SparseVec DiagonalTarget::gamma_full(int n, int g, std::int64_t x) const {
  const FreeBimoduleResolution& k = *k_;
  const HopfAlgebra& h = k.action->hopf;
  auto [i, d] = layout(n).decode(x);
  Accumulator acc;
  for (const auto& [idx, c] : h.delta(5, g).terms) {
    auto gs = h.split(idx, 5);
    const SparseVec& va = k.act_cols[gs[0]][d[0]];
    const SparseVec& v1 = k.gamma[i][gs[1]].column(static_cast<int>(d[1]));
    const SparseVec& vs = k.act_cols[gs[2]][d[2]];
    const SparseVec& v2 = k.gamma[n - i][gs[3]].column(static_cast<int>(d[3]));
    const SparseVec& vb = k.act_cols[gs[4]][d[4]];
    for (const auto& [p0, c0] : va.terms)
      for (const auto& [p1, c1] : v1.terms)
        for (const auto& [p2, c2] : vs.terms)
          for (const auto& [p3, c3] : v2.terms)
            for (const auto& [p4, c4] : vb.terms)
              acc.add(layout(n).encode(i, {p0, p1, p2, p3, p4}), c * c0 * c1 * c2 * c3 * c4);
  }
  return acc.finish();
}

SparseVec DiagonalTarget::act_full(int n, const SparseVec& v, int l, int r) const {
  const FinDimAlgebra& alg = k_->algebra;
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    auto [i, d] = layout(n).decode(x);
    SparseVec lv = left_product(alg, l, static_cast<int>(d[0]));
    SparseVec rv = right_product(alg, static_cast<int>(d[4]), r);
    for (const auto& [p, cp] : lv.terms)
      for (const auto& [q, cq] : rv.terms) acc.add(layout(n).encode(i, {p, d[1], d[2], d[3], q}), c * cp * cq);
  }
  return acc.finish();
}

SparseVec DiagonalTarget::augmentation_full(std::int64_t x) const {
  const FreeBimoduleResolution& k = *k_;
  const FinDimAlgebra& alg = k.algebra;
  const Field& f = alg.field();
  auto [i, d] = layout(0).decode(x);
  SparseVec v = basis_sparse(f, static_cast<int>(d[0]));
  v = alg.multiply(v, k.augmentation[d[1]]);
  v = alg.multiply(v, basis_sparse(f, static_cast<int>(d[2])));
  v = alg.multiply(v, k.augmentation[d[3]]);
  return alg.multiply(v, basis_sparse(f, static_cast<int>(d[4])));
}

SparseVec DiagonalTarget::omega(int q, std::int64_t m) const {
  Accumulator acc;
  for (const auto& t : k_->diagonal[q][m])
    acc.add(layout(q).encode(t.split, {t.left, t.first, t.middle, t.second, t.right}), t.coef);
  return acc.finish();
}

LiftTarget DiagonalTarget::lift_target() const {
  LiftTarget t;
  t.d = [this](int n) { return differential(n); };
  t.act = [this](int n, const SparseVec& v, int l, int r) { return act_full(n, v, l, r); };
  return t;
}

std::vector<std::string> check_condition_three(const DiagonalTarget& t) {
  std::vector<std::string> out;
  const FreeBimoduleResolution& k = t.source();
  if (k.diagonal.empty()) return {"no closed-form diagonal"};
  LiftTarget lt = t.lift_target();
  FreeMap omega;
  for (int q = 0; q <= t.top(); ++q) {
    omega.emplace_back();
    for (std::int64_t m = 0; m < k.base_dim(q); ++m) omega[q].push_back(t.omega(q, m));
  }
  FreeSource src = k.free_source();
  for (std::int64_t m = 0; m < k.base_dim(0); ++m) {
    Accumulator acc;
    for (const auto& [x, c] : omega[0][m].terms) acc.add(t.augmentation_full(x), c);
    if (acc.finish() != k.augmentation[m]) out.push_back("augmentation square fails on generator " + std::to_string(m));
  }
  for (int q = 1; q <= t.top(); ++q)
    for (std::int64_t m = 0; m < k.base_dim(q); ++m) {
      Accumulator lhs;
      for (const auto& [x, c] : omega[q][m].terms) lhs.add(t.differential_full(q, x), c);
      if (lhs.finish() != apply_free(omega, lt, q - 1, q - 1, src.boundary(q, m)))
        out.push_back("d omega != omega d at degree " + std::to_string(q) + " generator " + std::to_string(m));
    }
  if (k.action)
    for (int q = 0; q <= t.top(); ++q)
      for (int g = 0; g < k.action->hopf.dim(); ++g)
        for (std::int64_t m = 0; m < k.base_dim(q); ++m) {
          Accumulator lhs, rhs;
          for (const auto& [x, c] : omega[q][m].terms) lhs.add(t.gamma_full(q, g, x), c);
          for (const auto& [m2, c] : k.gamma[q][g].column(static_cast<int>(m)).terms) rhs.add(omega[q][m2], c);
          if (lhs.finish() != rhs.finish())
            out.push_back("omega is not Gamma-linear at degree " + std::to_string(q) + " for " +
                          k.action->hopf.algebra().label(g));
        }
  return out;
}

FreeMap lift_diagonal(const DiagonalTarget& t) {
  const FreeBimoduleResolution& k = t.source();
  const Field& f = k.algebra.field();
  SparseMatrix aug(f, k.adim(), static_cast<int>(t.dim(0)));
  for (std::int64_t x = 0; x < t.dim(0); ++x) aug.set_column(static_cast<int>(x), t.augmentation_full(x));
  std::vector<SparseVec> degree0;
  try {
    degree0 = solve(aug, k.augmentation);
  } catch (const NoSolution& e) {
    throw LiftFailed(std::string("diagonal lift in degree 0: ") + e.what());
  }
  return lift_chain_map(k.free_source(), t.lift_target(), std::move(degree0), t.top());
}

SparseMatrix MediatingResolution::include_k(int deg) const {
  std::int64_t n = k_offset.size() > static_cast<std::size_t>(deg) ? z_offset[deg] - k_offset[deg] : 0;
  SparseMatrix m(q.algebra.field(), static_cast<int>(q.base_dim(deg)), static_cast<int>(n));
  for (std::int64_t i = 0; i < n; ++i) m.set_column(static_cast<int>(i), SparseVec{{{k_offset[deg] + i, Scalar(1)}}});
  return m;
}

SparseMatrix MediatingResolution::include_p(int deg) const {
  std::int64_t n = q.base_dim(deg) - p_offset[deg];
  SparseMatrix m(q.algebra.field(), static_cast<int>(q.base_dim(deg)), static_cast<int>(n));
  for (std::int64_t i = 0; i < n; ++i) m.set_column(static_cast<int>(i), SparseVec{{{p_offset[deg] + i, Scalar(1)}}});
  return m;
}

MediatingResolution mediating_resolution(const FreeBimoduleResolution& k, const FreeBimoduleResolution& p, int length) {
  if (!(k.algebra == p.algebra)) throw std::invalid_argument("mediating_resolution: different algebras");
  if (length > k.length() || length > p.length()) throw std::invalid_argument("mediating_resolution: inputs too short");
  if (k.action.has_value() != p.action.has_value())
    throw std::invalid_argument("mediating_resolution: both or neither input must carry an action");
  const Field& f = k.algebra.field();
  MediatingResolution med;
  FreeBimoduleResolution& q = med.q;
  q.name = "mediating(" + k.name + ", " + p.name + ")";
  q.algebra = k.algebra;
  q.action = k.action;
  q.act_cols = k.act_cols;
  int ng = k.action ? k.action->hopf.dim() : 0;
  q.boundary.resize(static_cast<std::size_t>(length) + 1);
  q.gamma.resize(static_cast<std::size_t>(length) + 1);

  auto append_blocks = [&](int deg, const std::vector<SparseVec>& zbasis) {
    std::int64_t kb = k.base_dim(deg), zb = static_cast<std::int64_t>(zbasis.size()), pb = p.base_dim(deg);
    med.k_offset.push_back(0);
    med.z_offset.push_back(kb);
    med.p_offset.push_back(kb + zb);
    q.base_dims.push_back(kb + zb + pb);
    auto& bnd = q.boundary[deg];
    if (deg >= 1) {
      std::int64_t ko = med.k_offset[deg - 1], po = med.p_offset[deg - 1];
      for (std::int64_t m = 0; m < kb; ++m) {
        bnd.emplace_back();
        for (auto t : k.boundary[deg][m]) bnd.back().push_back({t.left, t.base + ko, t.right, t.coef});
      }
      for (const auto& z : zbasis) {
        bnd.emplace_back();
        for (const auto& [x, c] : z.terms) {
          int a, a2;
          std::int64_t m;
          q.full_decode(deg - 1, x, a, m, a2);
          bnd.back().push_back({a, m, a2, c});
        }
      }
      for (std::int64_t m = 0; m < pb; ++m) {
        bnd.emplace_back();
        for (auto t : p.boundary[deg][m]) bnd.back().push_back({t.left, t.base + po, t.right, t.coef});
      }
    }
    if (!k.action) return;
    Subspace zspace;
    SparseMatrix zmat;
    if (zb > 0) {
      zspace = Subspace::span(f, static_cast<int>(q.full_dim(deg - 1)), zbasis);
      zmat = SparseMatrix(f, static_cast<int>(q.full_dim(deg - 1)), static_cast<int>(zb));
      for (std::int64_t j = 0; j < zb; ++j) zmat.set_column(static_cast<int>(j), zbasis[j]);
    }
    for (int g = 0; g < ng; ++g) {
      SparseMatrix m(f, static_cast<int>(q.base_dims[deg]), static_cast<int>(q.base_dims[deg]));
      for (std::int64_t i = 0; i < kb; ++i) m.set_column(static_cast<int>(i), k.gamma[deg][g].column(static_cast<int>(i)));
      std::vector<SparseVec> images;
      for (const auto& z : zbasis) {
        Accumulator acc;
        for (const auto& [x, c] : z.terms) acc.add(q.gamma_full(deg - 1, g, x), c);
        images.push_back(acc.finish());
      }
      if (zb > 0) {
        auto coords = solve(zmat, images);
        for (std::int64_t j = 0; j < zb; ++j) {
          SparseVec col;
          for (const auto& [i, c] : coords[j].terms) col.terms.emplace_back(kb + i, c);
          m.set_column(static_cast<int>(kb + j), std::move(col));
        }
      }
      for (std::int64_t i = 0; i < pb; ++i) {
        SparseVec col;
        for (const auto& [r, c] : p.gamma[deg][g].column(static_cast<int>(i)).terms) col.terms.emplace_back(kb + zb + r, c);
        m.set_column(static_cast<int>(kb + zb + i), std::move(col));
      }
      q.gamma[deg].push_back(std::move(m));
    }
  };

  append_blocks(0, {});
  for (const auto& v : k.augmentation) q.augmentation.push_back(v);
  for (const auto& v : p.augmentation) q.augmentation.push_back(v);
  for (int deg = 1; deg <= length; ++deg) {
    int prev = deg - 1;
    int rows = static_cast<int>(prev == 0 ? q.adim() : q.full_dim(prev - 1));
    SparseMatrix d(f, rows, static_cast<int>(q.full_dim(prev)));
    for (std::int64_t x = 0; x < q.full_dim(prev); ++x)
      d.set_column(static_cast<int>(x), prev == 0 ? q.augmentation_full(x) : q.differential_full(prev, x));
    Subspace z = kernel_basis(d);
    append_blocks(deg, z.sparse_basis());
  }
  return med;
}

}  // namespace smashcoh
