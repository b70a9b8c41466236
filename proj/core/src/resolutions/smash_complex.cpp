#include "smashcoh/resolutions/smash_complex.hpp"

#include <stdexcept>

namespace smashcoh {

namespace {

/// Calls fn(digits, coef) for every term of the tensor product of the factors.
template <class Fn>
void for_each_product(const std::vector<const SparseVec*>& factors, const Scalar& coef, Fn&& fn) {
  std::vector<std::int64_t> digits(factors.size());
  auto rec = [&](auto&& self, std::size_t i, const Scalar& c) -> void {
    if (i == factors.size()) {
      fn(digits, c);
      return;
    }
    for (const auto& [idx, ci] : factors[i]->terms) {
      digits[i] = idx;
      self(self, i + 1, c * ci);
    }
  };
  rec(rec, 0, coef);
}

SparseVec unit_sparse(std::int64_t i) { return SparseVec{{{i, Scalar(1)}}}; }

}  // namespace

SmashComplex::SmashComplex(const FreeBimoduleResolution& k, const FreeRightComplex& l, int top)
    : k_(&k), l_(&l), up_(l), top_(top) {
  if (!k.action) throw std::invalid_argument("SmashComplex: K must carry a Gamma-action");
  if (!(k.action->hopf.algebra() == l.hopf.algebra())) throw std::invalid_argument("SmashComplex: Hopf algebras differ");
  if (top > k.length() || top > l.length()) throw std::invalid_argument("SmashComplex: resolutions too short");
  if (k.algebra.unit_index() < 0 || l.hopf.algebra().unit_index() < 0)
    throw std::invalid_argument("SmashComplex: units must be basis vectors");
  r_ = smash_product(*k.action);
  const std::int64_t a = k.adim(), d = l.gdim();
  for (int n = 0; n <= top; ++n) {
    SlotLayout b, f;
    for (int q = 0; q <= n; ++q) {
      b.add_slot({k.base_dim(q), l.base_dim(n - q)});
      f.add_slot({a, k.base_dim(q), a, d, l.base_dim(n - q), d});
    }
    base_.push_back(std::move(b));
    full_.push_back(std::move(f));
  }
  boundary_.emplace_back();
  for (int n = 1; n <= top; ++n) {
    std::vector<SparseVec> col;
    for (std::int64_t v = 0; v < base_dim(n); ++v)
      col.push_back(psi_inverse(n - 1, differential_full(n, generator_full(n, v))));
    boundary_.push_back(std::move(col));
  }
}

std::int64_t SmashComplex::free_index(int n, int r, std::int64_t v, int r2) const {
  return (r * base_dim(n) + v) * rdim() + r2;
}

void SmashComplex::free_decode(int n, std::int64_t f, int& r, std::int64_t& v, int& r2) const {
  r2 = static_cast<int>(f % rdim());
  f /= rdim();
  v = f % base_dim(n);
  r = static_cast<int>(f / base_dim(n));
}

std::int64_t SmashComplex::generator_full(int n, std::int64_t v) const {
  auto [q, w] = base_layout(n).decode(v);
  int ua = k_->algebra.unit_index(), ug = hopf().algebra().unit_index();
  return full_layout(n).encode(q, {ua, w[0], ua, ug, w[1], ug});
}

SparseVec SmashComplex::differential_full(int n, std::int64_t x) const {
  auto [q, w] = full_layout(n).decode(x);
  int p = n - q;
  Accumulator acc;
  if (q >= 1)
    for (const auto& [y, c] : k_->differential_full(q, k_->full_index(q, static_cast<int>(w[0]), w[1], static_cast<int>(w[2]))).terms) {
      int a, a2;
      std::int64_t m;
      k_->full_decode(q - 1, y, a, m, a2);
      acc.add(full_layout(n - 1).encode(q - 1, {a, m, a2, w[3], w[4], w[5]}), c);
    }
  if (p >= 1) {
    Scalar sign = q % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (const auto& [y, c] : up_.differential_full(p, up_.index(p, static_cast<int>(w[3]), w[4], static_cast<int>(w[5]))).terms) {
      int g, g2;
      std::int64_t b;
      up_.decode(p - 1, y, g, b, g2);
      acc.add(full_layout(n - 1).encode(q, {w[0], w[1], w[2], g, b, g2}), sign * c);
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::augmentation_full(std::int64_t x) const {
  auto [q, w] = full_layout(0).decode(x);
  SparseVec ka = k_->augmentation_full(k_->full_index(0, static_cast<int>(w[0]), w[1], static_cast<int>(w[2])));
  SparseVec lg = up_.xi_up(up_.index(0, static_cast<int>(w[3]), w[4], static_cast<int>(w[5])));
  Accumulator acc;
  for (const auto& [i, ci] : ka.terms)
    for (const auto& [j, cj] : lg.terms) acc.add(rindex(static_cast<int>(i), static_cast<int>(j)), ci * cj);
  return acc.finish();
}

SparseVec SmashComplex::left_A(int n, const SparseVec& x, int a) const {
  Accumulator acc;
  for (const auto& [y, c] : x.terms) {
    auto [q, w] = full_layout(n).decode(y);
    for (const auto& [k, ck] : k_->algebra.product(a, static_cast<int>(w[0])).terms) {
      w[0] = k;
      acc.add(full_layout(n).encode(q, w), c * ck);
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::left_gamma(int n, const SparseVec& x, int g) const {
  const HopfAlgebra& h = hopf();
  const std::int64_t d = h.dim();
  Accumulator acc;
  for (const auto& [y, c] : x.terms) {
    auto [q, w] = full_layout(n).decode(y);
    std::int64_t kidx = k_->full_index(q, static_cast<int>(w[0]), w[1], static_cast<int>(w[2]));
    for (const auto& [gi, cg] : h.coproduct(g).terms) {
      SparseVec kpart = k_->gamma_full(q, static_cast<int>(gi / d), kidx);
      const SparseVec& lpart = h.algebra().product(static_cast<int>(gi % d), static_cast<int>(w[3]));
      for (const auto& [kk, ck] : kpart.terms) {
        int a, a2;
        std::int64_t m;
        k_->full_decode(q, kk, a, m, a2);
        for (const auto& [lg, cl] : lpart.terms) acc.add(full_layout(n).encode(q, {a, m, a2, lg, w[4], w[5]}), c * cg * ck * cl);
      }
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::right_A(int n, const SparseVec& x, int a) const {
  Accumulator acc;
  for (const auto& [y, c] : x.terms) {
    auto [q, w] = full_layout(n).decode(y);
    int p = n - q;
    for (const auto& [z, cz] : up_.coaction(p, up_.index(p, static_cast<int>(w[3]), w[4], static_cast<int>(w[5]))).terms) {
      std::int64_t kgam = z / up_.dim(p);
      int g, g2;
      std::int64_t b;
      up_.decode(p, z % up_.dim(p), g, b, g2);
      for (const auto& [e, ce] : k_->act_cols[kgam][a].terms)
        for (const auto& [t, ct] : k_->algebra.product(static_cast<int>(w[2]), static_cast<int>(e)).terms)
          acc.add(full_layout(n).encode(q, {w[0], w[1], t, g, b, g2}), c * cz * ce * ct);
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::right_gamma(int n, const SparseVec& x, int g) const {
  Accumulator acc;
  for (const auto& [y, c] : x.terms) {
    auto [q, w] = full_layout(n).decode(y);
    for (const auto& [k, ck] : hopf().algebra().product(static_cast<int>(w[5]), g).terms) {
      w[5] = k;
      acc.add(full_layout(n).encode(q, w), c * ck);
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::left_R(int n, const SparseVec& x, int r) const {
  const int d = hopf().dim();
  return left_A(n, left_gamma(n, x, r % d), r / d);
}

SparseVec SmashComplex::right_R(int n, const SparseVec& x, int r) const {
  const int d = hopf().dim();
  return right_gamma(n, right_A(n, x, r / d), r % d);
}

SparseVec SmashComplex::psi(int n, const SparseVec& f) const {
  const HopfAlgebra& h = hopf();
  const int d = h.dim();
  Accumulator acc;
  for (const auto& [idx, c] : f.terms) {
    int r, r2;
    std::int64_t v;
    free_decode(n, idx, r, v, r2);
    auto [q, w] = base_layout(n).decode(v);
    int a = r / d, g = r % d, a2 = r2 / d, g2 = r2 % d;
    for (const auto& [gi, cg] : h.delta(3, g).terms) {
      auto gs = h.split(gi, 3);
      const SparseVec& mv = k_->gamma[q][gs[0]].column(static_cast<int>(w[0]));
      const SparseVec& av = k_->act_cols[gs[1]][a2];
      for (const auto& [m, cm] : mv.terms)
        for (const auto& [t, ct] : av.terms) acc.add(full_layout(n).encode(q, {a, m, t, gs[2], w[1], g2}), c * cg * cm * ct);
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::psi_inverse(int n, const SparseVec& x) const {
  const HopfAlgebra& h = hopf();
  Accumulator acc;
  for (const auto& [idx, c] : x.terms) {
    auto [q, w] = full_layout(n).decode(idx);
    int a = static_cast<int>(w[0]), a2 = static_cast<int>(w[2]), g = static_cast<int>(w[3]), g2 = static_cast<int>(w[5]);
    for (const auto& [gi, cg] : h.delta(3, g).terms) {
      auto gs = h.split(gi, 3);
      int r = rindex(a, gs[2]);
      Accumulator macc;
      for (const auto& [s, cs] : h.Sinv(gs[1]).terms) macc.add(k_->gamma[q][s].column(static_cast<int>(w[1])), cs);
      SparseVec mv = macc.finish();
      Accumulator aacc;
      for (const auto& [s, cs] : h.Sinv(gs[0]).terms) aacc.add(k_->act_cols[s][a2], cs);
      SparseVec av = aacc.finish();
      for (const auto& [m, cm] : mv.terms) {
        std::int64_t v = base_layout(n).encode(q, {m, w[4]});
        for (const auto& [t, ct] : av.terms) acc.add(free_index(n, r, v, rindex(static_cast<int>(t), g2)), c * cg * cm * ct);
      }
    }
  }
  return acc.finish();
}

SparseVec SmashComplex::generator_augmentation(std::int64_t v) const { return augmentation_full(generator_full(0, v)); }

SparseVec SmashComplex::free_act(int n, const SparseVec& f, int r, int r2) const {
  Accumulator acc;
  for (const auto& [idx, c] : f.terms) {
    int s, s2;
    std::int64_t v;
    free_decode(n, idx, s, v, s2);
    SparseVec lv = r < 0 ? unit_sparse(s) : r_.product(r, s);
    SparseVec rv = r2 < 0 ? unit_sparse(s2) : r_.product(s2, r2);
    for (const auto& [i, ci] : lv.terms)
      for (const auto& [j, cj] : rv.terms) acc.add(free_index(n, static_cast<int>(i), v, static_cast<int>(j)), c * ci * cj);
  }
  return acc.finish();
}

FreeSource SmashComplex::free_source() const {
  FreeSource s;
  for (int n = 0; n <= top_; ++n) s.base_dims.push_back(base_dim(n));
  int u = r_.unit_index();
  s.boundary = [this, u](int n, std::int64_t v) {
    std::vector<FreeTerm> out;
    for (const auto& [idx, c] : boundary(n, v).terms) {
      int r, r2;
      std::int64_t w;
      free_decode(n - 1, idx, r, w, r2);
      out.push_back(FreeTerm{w, r == u ? -1 : r, r2 == u ? -1 : r2, c});
    }
    return out;
  };
  return s;
}

ModuleComplex SmashComplex::to_complex(bool augmented) const {
  const Field& f = r_.field();
  int lo = augmented ? -1 : 0;
  std::vector<std::int64_t> dims;
  if (augmented) dims.push_back(rdim());
  for (int n = 0; n <= top_; ++n) dims.push_back(full_dim(n));
  ModuleComplex c(f, lo, dims, -1);
  for (int n = augmented ? 0 : 1; n <= top_; ++n) {
    SparseMatrix d(f, c.dim(n - 1), c.dim(n));
    for (std::int64_t x = 0; x < full_dim(n); ++x)
      d.set_column(static_cast<int>(x), n == 0 ? augmentation_full(x) : differential_full(n, x));
    c.set_differential(n, std::move(d));
  }
  const int da = k_->adim(), dg = hopf().dim();
  const int ua = k_->algebra.unit_index(), ug = hopf().algebra().unit_index();
  auto family = [&](const std::string& name, int count, auto&& on_r, auto&& on_x) {
    ActionFamily fam{name, {}};
    for (int n = lo; n <= top_; ++n) {
      std::vector<SparseMatrix> ops;
      for (int e = 0; e < count; ++e) {
        SparseMatrix m(f, c.dim(n), c.dim(n));
        for (int x = 0; x < c.dim(n); ++x) m.set_column(x, n < 0 ? on_r(e, x) : on_x(n, unit_sparse(x), e));
        ops.push_back(std::move(m));
      }
      fam.ops.push_back(std::move(ops));
    }
    c.add_family(std::move(fam));
  };
  family("left:A", da, [&](int e, int x) { return r_.product(rindex(e, ug), x); },
         [&](int n, const SparseVec& x, int e) { return left_A(n, x, e); });
  family("left:Gamma", dg, [&](int e, int x) { return r_.product(rindex(ua, e), x); },
         [&](int n, const SparseVec& x, int e) { return left_gamma(n, x, e); });
  family("right:A", da, [&](int e, int x) { return r_.product(x, rindex(e, ug)); },
         [&](int n, const SparseVec& x, int e) { return right_A(n, x, e); });
  family("right:Gamma", dg, [&](int e, int x) { return r_.product(x, rindex(ua, e)); },
         [&](int n, const SparseVec& x, int e) { return right_gamma(n, x, e); });
  family("left:R", rdim(), [&](int e, int x) { return r_.product(e, x); },
         [&](int n, const SparseVec& x, int e) { return left_R(n, x, e); });
  family("right:R", rdim(), [&](int e, int x) { return r_.product(x, e); },
         [&](int n, const SparseVec& x, int e) { return right_R(n, x, e); });
  c.trusted_hi = top_ - 1;
  return c;
}

SmashSquare::SmashSquare(const SmashComplex& x, int top) : x_(&x) {
  if (top > x.top()) throw std::invalid_argument("SmashSquare: complex too short");
  const std::int64_t r = x.rdim();
  for (int n = 0; n <= top; ++n) {
    SlotLayout l;
    for (int n1 = 0; n1 <= n; ++n1) l.add_slot({r, x.base_dim(n1), r, x.base_dim(n - n1), r});
    layouts_.push_back(std::move(l));
  }
}

SparseVec SmashSquare::differential_full(int n, std::int64_t w) const {
  const SmashComplex& x = *x_;
  const FinDimAlgebra& r = x.smash();
  auto [n1, dg] = layout(n).decode(w);
  int n2 = n - n1;
  Accumulator acc;
  if (n1 >= 1)
    for (const auto& [f, c] : x.free_act(n1 - 1, x.boundary(n1, dg[1]), static_cast<int>(dg[0]), static_cast<int>(dg[2])).terms) {
      int s0, s1;
      std::int64_t u;
      x.free_decode(n1 - 1, f, s0, u, s1);
      acc.add(layout(n - 1).encode(n1 - 1, {s0, u, s1, dg[3], dg[4]}), c);
    }
  if (n2 >= 1) {
    Scalar sign = n1 % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (const auto& [f, c] : x.boundary(n2, dg[3]).terms) {
      int t0, t2;
      std::int64_t u;
      x.free_decode(n2 - 1, f, t0, u, t2);
      for (const auto& [k, ck] : r.product(static_cast<int>(dg[2]), t0).terms)
        for (const auto& [k2, ck2] : r.product(t2, static_cast<int>(dg[4])).terms)
          acc.add(layout(n - 1).encode(n1, {dg[0], dg[1], k, u, k2}), sign * c * ck * ck2);
    }
  }
  return acc.finish();
}

SparseVec SmashSquare::act(int n, const SparseVec& w, int r, int r2) const {
  const FinDimAlgebra& R = x_->smash();
  Accumulator acc;
  for (const auto& [idx, c] : w.terms) {
    auto [n1, dg] = layout(n).decode(idx);
    SparseVec lv = r < 0 ? unit_sparse(dg[0]) : R.product(r, static_cast<int>(dg[0]));
    SparseVec rv = r2 < 0 ? unit_sparse(dg[4]) : R.product(static_cast<int>(dg[4]), r2);
    for (const auto& [i, ci] : lv.terms)
      for (const auto& [j, cj] : rv.terms) acc.add(layout(n).encode(n1, {i, dg[1], dg[2], dg[3], j}), c * ci * cj);
  }
  return acc.finish();
}

SparseVec SmashSquare::augmentation_full(std::int64_t w) const {
  const FinDimAlgebra& R = x_->smash();
  auto [n1, dg] = layout(0).decode(w);
  SparseVec v = R.multiply(unit_sparse(dg[0]), x_->generator_augmentation(dg[1]));
  v = R.multiply(v, unit_sparse(dg[2]));
  v = R.multiply(v, x_->generator_augmentation(dg[3]));
  return R.multiply(v, unit_sparse(dg[4]));
}

SparseVec SmashSquare::merge(int n1, const SparseVec& f1, int n2, const SparseVec& f2) const {
  const SmashComplex& x = *x_;
  Accumulator acc;
  for (const auto& [i1, c1] : f1.terms) {
    int r0, r1;
    std::int64_t v1;
    x.free_decode(n1, i1, r0, v1, r1);
    for (const auto& [i2, c2] : f2.terms) {
      int s0, s2;
      std::int64_t v2;
      x.free_decode(n2, i2, s0, v2, s2);
      for (const auto& [k, ck] : x.smash().product(r1, s0).terms)
        acc.add(layout(n1 + n2).encode(n1, {r0, v1, k, v2, s2}), c1 * c2 * ck);
    }
  }
  return acc.finish();
}

TwistSource::TwistSource(const SmashComplex& x, const SmashSquare& sq, int top) : x_(&x), sq_(&sq) {
  const FreeBimoduleResolution& k = x.K();
  const FreeRightComplex& l = x.L();
  const std::int64_t a = k.adim(), d = l.gdim();
  for (int n = 0; n <= top; ++n) {
    SlotLayout lay;
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<Key> keys;
    for (int kd = 0; kd <= n; ++kd)
      for (int i = 0; i <= kd; ++i)
        for (int j = 0; j <= n - kd; ++j) {
          ids[{kd, i, j}] = lay.add_slot(
              {a, k.base_dim(i), a, k.base_dim(kd - i), a, d, l.base_dim(j), d, l.base_dim(n - kd - j), d});
          keys.push_back({kd, i, j});
        }
    layouts_.push_back(std::move(lay));
    slots_.push_back(std::move(ids));
    keys_.push_back(std::move(keys));
  }
}

int TwistSource::slot(int n, int k, int i, int j) const {
  return slots_[static_cast<std::size_t>(n)].at({k, i, j});
}

SparseVec TwistSource::phi(int n, const SparseVec& z) const {
  const SmashComplex& x = *x_;
  const FreeBimoduleResolution& K = x.K();
  const HopfAlgebra& h = x.hopf();
  const FinDimAlgebra& g = h.algebra();
  const int d = h.dim();
  const int ua = K.algebra.unit_index(), ug = g.unit_index();
  Accumulator acc;
  for (const auto& [idx, c] : z.terms) {
    auto [sl, w] = layout(n).decode(idx);
    auto [kd, i, j] = key(n, sl);
    int ky = kd - i;
    Scalar sign = (j * ky) % 2 == 0 ? Scalar(1) : Scalar(-1);
    int n1 = i + j, n2 = n - n1;
    for (const auto& [gi, cg] : h.coproduct(static_cast<int>(w[5])).terms)
      for (const auto& [ei, ce] : h.coproduct(static_cast<int>(w[7])).terms) {
        SparseVec x1{{{x.full_layout(n1).encode(i, {w[0], w[1], w[2], gi % d, w[6], ei % d}), Scalar(1)}}};
        SparseVec f1 = x.psi_inverse(n1, x1);
        Accumulator delta;
        for (const auto& [p, cp] : g.product(static_cast<int>(gi / d), static_cast<int>(ei / d)).terms)
          delta.add(h.Sinv(static_cast<int>(p)), cp);
        Accumulator x2;
        for (const auto& [dl, cd] : delta.finish().terms)
          for (const auto& [di, cdi] : h.coproduct(static_cast<int>(dl)).terms)
            for_each_product({&K.gamma[ky][di / d].column(static_cast<int>(w[3])), &K.act_cols[di % d][w[4]]}, cd * cdi,
                             [&](const std::vector<std::int64_t>& e, const Scalar& ck) {
                               x2.add(x.full_layout(n2).encode(ky, {ua, e[0], e[1], ug, w[8], w[9]}), ck);
                             });
        SparseVec f2 = x.psi_inverse(n2, x2.finish());
        acc.add(sq_->merge(n1, f1, n2, f2), sign * c * cg * ce);
      }
  }
  return acc.finish();
}

SparseVec TwistSource::phi_inverse(int n, const SparseVec& w) const {
  const SmashComplex& x = *x_;
  const FreeBimoduleResolution& K = x.K();
  const HopfAlgebra& h = x.hopf();
  const FinDimAlgebra& g = h.algebra();
  const int d = h.dim();
  const int ur = x.smash().unit_index();
  Accumulator acc;
  for (const auto& [idx, c] : w.terms) {
    auto [n1, dg] = sq_->layout(n).decode(idx);
    int n2 = n - n1;
    SparseVec x1 = x.psi(n1, SparseVec{{{x.free_index(n1, static_cast<int>(dg[0]), dg[1], static_cast<int>(dg[2])), Scalar(1)}}});
    SparseVec x2 = x.psi(n2, SparseVec{{{x.free_index(n2, ur, dg[3], static_cast<int>(dg[4])), Scalar(1)}}});
    for (const auto& [y1, c1] : x1.terms) {
      auto [q1, u] = x.full_layout(n1).decode(y1);
      int j = n1 - q1;
      for (const auto& [y2, c2] : x2.terms) {
        auto [q2, v] = x.full_layout(n2).decode(y2);
        Scalar sign = (j * q2) % 2 == 0 ? Scalar(1) : Scalar(-1);
        int kd = q1 + q2;
        int sl = slot(n, kd, q1, j);
        for (const auto& [gi, cg] : h.coproduct(static_cast<int>(u[3])).terms)
          for (const auto& [ei, ce] : h.coproduct(static_cast<int>(u[5])).terms)
            for (const auto& [p, cp] : g.product(static_cast<int>(gi / d), static_cast<int>(ei / d)).terms)
              for (const auto& [di, cdi] : h.coproduct(static_cast<int>(p)).terms)
                for_each_product({&K.gamma[q2][di / d].column(static_cast<int>(v[1])), &K.act_cols[di % d][v[2]]},
                                 sign * c * c1 * c2 * cg * ce * cp * cdi,
                                 [&](const std::vector<std::int64_t>& e, const Scalar& ck) {
                                   acc.add(layout(n).encode(sl, {u[0], u[1], u[2], e[0], e[1], gi % d, u[4], ei % d, v[4], v[5]}),
                                           ck);
                                 });
      }
    }
  }
  return acc.finish();
}

SparseVec TwistSource::left_gamma(int n, const SparseVec& z, int g) const {
  const FreeBimoduleResolution& K = x_->K();
  const HopfAlgebra& h = x_->hopf();
  Accumulator acc;
  for (const auto& [idx, c] : z.terms) {
    auto [sl, w] = layout(n).decode(idx);
    auto [kd, i, j] = key(n, sl);
    for (const auto& [gi, cg] : h.delta(6, g).terms) {
      auto gs = h.split(gi, 6);
      SparseVec lg = h.algebra().product(gs[5], static_cast<int>(w[5]));
      for_each_product({&K.act_cols[gs[0]][w[0]], &K.gamma[i][gs[1]].column(static_cast<int>(w[1])), &K.act_cols[gs[2]][w[2]],
                        &K.gamma[kd - i][gs[3]].column(static_cast<int>(w[3])), &K.act_cols[gs[4]][w[4]], &lg},
                       c * cg, [&](const std::vector<std::int64_t>& e, const Scalar& ck) {
                         acc.add(layout(n).encode(sl, {e[0], e[1], e[2], e[3], e[4], e[5], w[6], w[7], w[8], w[9]}), ck);
                       });
    }
  }
  return acc.finish();
}

SmashDiagonal::SmashDiagonal(const SmashComplex& x, const TensorSquare& t, const LDiagonal& s, int top)
    : x_(&x), top_(top), sq_(x, top), tw_(x, sq_, top) {
  const FreeBimoduleResolution& K = x.K();
  if (K.diagonal.empty()) throw std::invalid_argument("SmashDiagonal: K needs a closed-form diagonal");
  if (top > t.top() || static_cast<int>(s.map.size()) <= top) throw std::invalid_argument("SmashDiagonal: sigma too short");
  InducedSquare isq(x.Lup(), top);
  const int ug = x.hopf().algebra().unit_index();
  for (int n = 0; n <= top; ++n) {
    std::vector<SparseVec> col;
    for (std::int64_t v = 0; v < x.base_dim(n); ++v) {
      auto [q, w] = x.base_layout(n).decode(v);
      int p = n - q;
      SparseVec sup = isq.sigma_up(t, s, p, x.Lup().index(p, ug, w[1], ug));
      Accumulator z;
      for (const auto& [y, cy] : sup.terms) {
        auto [j, l] = isq.layout(p).decode(y);
        for (const auto& om : K.diagonal[q][w[0]])
          z.add(tw_.layout(n).encode(tw_.slot(n, q, om.split, j),
                                     {om.left, om.first, om.middle, om.second, om.right, l[0], l[1], l[2], l[3], l[4]}),
                om.coef * cy);
      }
      col.push_back(tw_.phi(n, z.finish()));
    }
    images_.push_back(std::move(col));
  }
}

SparseVec SmashDiagonal::apply(int n, const SparseVec& f) const {
  Accumulator acc;
  for (const auto& [idx, c] : f.terms) {
    int r, r2;
    std::int64_t v;
    x_->free_decode(n, idx, r, v, r2);
    acc.add(sq_.act(n, image(n, v), r, r2), c);
  }
  return acc.finish();
}

std::vector<std::string> SmashDiagonal::check() const {
  std::vector<std::string> out;
  const SmashComplex& x = *x_;
  for (std::int64_t v = 0; v < x.base_dim(0); ++v) {
    Accumulator acc;
    for (const auto& [w, c] : image(0, v).terms) acc.add(sq_.augmentation_full(w), c);
    if (acc.finish() != x.generator_augmentation(v)) out.push_back("augmentation fails on generator " + std::to_string(v));
  }
  for (int n = 1; n <= top_; ++n)
    for (std::int64_t v = 0; v < x.base_dim(n); ++v) {
      Accumulator lhs;
      for (const auto& [w, c] : image(n, v).terms) lhs.add(sq_.differential_full(n, w), c);
      if (lhs.finish() != apply(n - 1, x.boundary(n, v)))
        out.push_back("diagonal is not a chain map at degree " + std::to_string(n) + " generator " + std::to_string(v));
    }
  return out;
}

}  // namespace smashcoh
