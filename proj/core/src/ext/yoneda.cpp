#include "smashcoh/ext/yoneda.hpp"

namespace smashcoh {

namespace {

Scalar sign(int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

Matrix combine(const std::vector<Matrix>& mats, const SparseVec& v, const Field& f, int dim) {
  Matrix out(f, dim, dim);
  for (const auto& [i, c] : v.terms) out = out + mats[static_cast<std::size_t>(i)].scaled(c);
  return out;
}

SparseMatrix from_columns(const Field& f, int rows, std::vector<Accumulator>& cols) {
  SparseMatrix m(f, rows, static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) m.set_column(static_cast<int>(i), cols[i].finish());
  return m;
}

}  // namespace

FreeDgData free_dg_data(const FreeBimoduleResolution& k) {
  FreeDgData d;
  d.algebra = k.algebra;
  d.base_dims = k.base_dims;
  const FreeBimoduleResolution* kp = &k;
  d.boundary = [kp](int n, std::int64_t v) { return kp->boundary[n][v]; };
  if (!k.diagonal.empty()) d.diagonal = [kp](int n, std::int64_t v) { return kp->diagonal[n][v]; };
  return d;
}

FreeDgData free_dg_data(const SmashComplex& x, const SmashDiagonal* diag) {
  FreeDgData d;
  d.algebra = x.smash();
  for (int n = 0; n <= x.top(); ++n) d.base_dims.push_back(x.base_dim(n));
  const SmashComplex* xp = &x;
  d.boundary = [xp](int n, std::int64_t v) {
    std::vector<BimoduleTerm> out;
    for (const auto& [idx, c] : xp->boundary(n, v).terms) {
      int r, r2;
      std::int64_t w;
      xp->free_decode(n - 1, idx, r, w, r2);
      out.push_back({r, w, r2, c});
    }
    return out;
  };
  if (diag)
    d.diagonal = [diag](int n, std::int64_t v) {
      std::vector<DiagonalTerm> out;
      const SlotLayout& lay = diag->square().layout(n);
      for (const auto& [idx, c] : diag->image(n, v).terms) {
        auto [slot, dg] = lay.decode(idx);
        out.push_back({static_cast<int>(dg[0]), slot, dg[1], static_cast<int>(dg[2]), dg[3], static_cast<int>(dg[4]), c});
      }
      return out;
    };
  return d;
}

ModulePair module_pair(const SmashModule& m, const SmashModule& n, bool over_smash) {
  ModulePair p{m.dim, n.dim, {}, {}};
  if (over_smash) {
    p.rho_m = m.rho;
    p.rho_n = n.rho;
  } else {
    for (int a = 0; a < m.action.algebra.dim(); ++a) {
      p.rho_m.push_back(m.of_a(a));
      p.rho_n.push_back(n.of_a(a));
    }
  }
  return p;
}

YonedaGamma yoneda_gamma(const FreeBimoduleResolution& k, const SmashModule& m, const SmashModule& n) {
  if (k.gamma.empty()) throw std::invalid_argument("yoneda_gamma: resolution carries no Gamma-action");
  YonedaGamma g{m.action.hopf, k.gamma, {}, {}};
  for (int i = 0; i < m.action.hopf.dim(); ++i) {
    g.rho_m.push_back(m.of_gamma(i));
    g.rho_n.push_back(n.of_gamma(i));
  }
  return g;
}

YonedaAlgebra::YonedaAlgebra(FreeDgData p, ModulePair mods, int top, std::optional<YonedaGamma> gamma)
    : p_(std::move(p)), mods_(std::move(mods)), top_(top), gamma_(std::move(gamma)) {
  if (top > p_.length()) throw std::invalid_argument("YonedaAlgebra: complex is shorter than the requested top");
  const Field& f = p_.algebra.field();
  const int dm = mods_.dim_m, dn = mods_.dim_n;
  std::vector<std::int64_t> dims;
  for (int q = 0; q <= top; ++q) dims.push_back(p_.base_dims[q] * dm * dn);
  complex_ = ModuleComplex(f, 0, dims, 1);
  complex_.trusted_hi = top - 1;
  for (int q = 0; q < top; ++q) {
    std::vector<Accumulator> cols(static_cast<std::size_t>(dims[q]));
    Scalar s = -sign(q);
    for (std::int64_t v = 0; v < p_.base_dims[q + 1]; ++v)
      for (const auto& t : p_.boundary(q + 1, v)) {
        const Matrix& rn = mods_.rho_n[static_cast<std::size_t>(t.left)];
        const Matrix& rm = mods_.rho_m[static_cast<std::size_t>(t.right)];
        for (int x = 0; x < dm; ++x)
          for (int x2 = 0; x2 < dm; ++x2) {
            if (rm(x2, x).is_zero()) continue;
            for (int y2 = 0; y2 < dn; ++y2)
              for (int y = 0; y < dn; ++y)
                if (!rn(y, y2).is_zero())
                  cols[static_cast<std::size_t>((t.base * dm + x2) * dn + y2)].add((v * dm + x) * dn + y,
                                                                                   s * t.coef * rm(x2, x) * rn(y, y2));
          }
      }
    complex_.set_differential(q, from_columns(f, static_cast<int>(dims[q + 1]), cols));
  }
  if (!gamma_) return;
  const HopfAlgebra& h = gamma_->hopf;
  ActionFamily fam{"right:Gamma", {}};
  for (int q = 0; q <= top; ++q) {
    action_.emplace_back();
    for (int g = 0; g < h.dim(); ++g) {
      std::vector<Accumulator> cols(static_cast<std::size_t>(dims[q]));
      for (const auto& [idx, c3] : h.delta(3, g).terms) {
        std::vector<int> gs = h.split(idx, 3);
        Matrix sn = combine(gamma_->rho_n, h.S(gs[0]), f, dn);
        const Matrix& rm = gamma_->rho_m[static_cast<std::size_t>(gs[2])];
        const SparseMatrix& act = gamma_->base_action[q][gs[1]];
        for (std::int64_t v = 0; v < p_.base_dims[q]; ++v)
          for (const auto& [v2, k] : act.column(static_cast<int>(v)).terms)
            for (int x = 0; x < dm; ++x)
              for (int x2 = 0; x2 < dm; ++x2) {
                if (rm(x2, x).is_zero()) continue;
                for (int y2 = 0; y2 < dn; ++y2)
                  for (int y = 0; y < dn; ++y)
                    if (!sn(y, y2).is_zero())
                      cols[static_cast<std::size_t>((v2 * dm + x2) * dn + y2)].add((v * dm + x) * dn + y,
                                                                                   c3 * k * rm(x2, x) * sn(y, y2));
              }
      }
      action_[q].push_back(from_columns(f, static_cast<int>(dims[q]), cols));
    }
    fam.ops.push_back(action_[q]);
  }
  complex_.add_family(std::move(fam));
}

const HopfAlgebra& YonedaAlgebra::hopf() const {
  if (!gamma_) throw std::logic_error("YonedaAlgebra: no Gamma-action attached");
  return gamma_->hopf;
}

const SparseMatrix& YonedaAlgebra::right_action(int q, int g) const {
  if (!gamma_) throw std::logic_error("YonedaAlgebra: no Gamma-action attached");
  return action_[static_cast<std::size_t>(q)][static_cast<std::size_t>(g)];
}

Vec YonedaAlgebra::product(int n1, const Vec& x, int n2, const Vec& y) const {
  if (!p_.diagonal) throw std::logic_error("YonedaAlgebra: no diagonal attached");
  if (mods_.dim_m != mods_.dim_n) throw std::logic_error("YonedaAlgebra: products need M = N");
  int n = n1 + n2;
  if (n > top_) throw std::out_of_range("YonedaAlgebra::product beyond top");
  const int d = mods_.dim_m;
  const Field& f = p_.algebra.field();
  Vec out(static_cast<std::size_t>(p_.base_dims[n] * d * d));
  if (is_zero(x) || is_zero(y)) return out;
  // F(v (x) u) for a cochain F given densely
  auto eval = [d](const Vec& F, std::int64_t v, const Vec& u) {
    Vec r(static_cast<std::size_t>(d));
    for (int x2 = 0; x2 < d; ++x2)
      if (!u[x2].is_zero())
        for (int y = 0; y < d; ++y) {
          const Scalar& c = F[static_cast<std::size_t>((v * d + x2) * d + y)];
          if (!c.is_zero()) r[y] += u[x2] * c;
        }
    return r;
  };
  Scalar s = sign(n1 * n2);
  const auto& rho = mods_.rho_m;
  for (std::int64_t v = 0; v < p_.base_dims[n]; ++v) {
    std::vector<DiagonalTerm> terms = p_.diagonal(n, v);
    for (int xi = 0; xi < d; ++xi) {
      Vec acc(static_cast<std::size_t>(d));
      Vec ex = unit_vec(f, static_cast<std::size_t>(d), static_cast<std::size_t>(xi));
      for (const auto& t : terms) {
        if (t.split != n1) continue;
        Vec u = eval(y, t.second, rho[static_cast<std::size_t>(t.right)].apply(ex));
        if (is_zero(u)) continue;
        u = eval(x, t.first, rho[static_cast<std::size_t>(t.middle)].apply(u));
        if (is_zero(u)) continue;
        axpy(acc, s * t.coef, rho[static_cast<std::size_t>(t.left)].apply(u));
      }
      for (int yi = 0; yi < d; ++yi) out[static_cast<std::size_t>((v * d + xi) * d + yi)] = acc[yi];
    }
  }
  return out;
}

ModuleComplex hom_ae_bimodule_complex(const FreeBimoduleResolution& k, const SmashModule& m, const SmashModule& n,
                                      int top) {
  const Field& f = k.algebra.field();
  const int dm = m.dim, dn = n.dim, w = dm * dn;
  std::vector<std::int64_t> dims;
  for (int q = 0; q <= top; ++q) dims.push_back(k.base_dim(q) * w);
  ModuleComplex c(f, 0, dims, 1);
  c.trusted_hi = top - 1;
  for (int q = 0; q < top; ++q) {
    std::vector<Accumulator> cols(static_cast<std::size_t>(dims[q]));
    Scalar s = -sign(q);
    for (std::int64_t v = 0; v < k.base_dim(q + 1); ++v)
      for (const auto& t : k.boundary[q + 1][v]) {
        Matrix rn = n.of_a(t.left), rm = m.of_a(t.right);
        for (int y2 = 0; y2 < dn; ++y2)
          for (int x2 = 0; x2 < dm; ++x2)
            for (int y = 0; y < dn; ++y)
              for (int x = 0; x < dm; ++x) {
                Scalar e = rn(y, y2) * rm(x2, x);
                if (!e.is_zero()) cols[static_cast<std::size_t>(t.base * w + y2 * dm + x2)].add(v * w + y * dm + x, s * t.coef * e);
              }
      }
    c.set_differential(q, from_columns(f, static_cast<int>(dims[q + 1]), cols));
  }
  const HopfAlgebra& h = m.action.hopf;
  ActionFamily fam{"right:Gamma", {}};
  for (int q = 0; q <= top; ++q) {
    std::vector<SparseMatrix> ops;
    for (int g = 0; g < h.dim(); ++g) {
      std::vector<Accumulator> cols(static_cast<std::size_t>(dims[q]));
      for (const auto& [idx, c3] : h.delta(3, g).terms) {
        std::vector<int> gs = h.split(idx, 3);
        Matrix sn = n.of_gamma(h.S(gs[0]));
        Matrix rm = m.of_gamma(gs[2]);
        for (std::int64_t v = 0; v < k.base_dim(q); ++v)
          for (const auto& [v2, kk] : k.gamma[q][gs[1]].column(static_cast<int>(v)).terms)
            for (int y2 = 0; y2 < dn; ++y2)
              for (int x2 = 0; x2 < dm; ++x2)
                for (int y = 0; y < dn; ++y)
                  for (int x = 0; x < dm; ++x) {
                    Scalar e = sn(y, y2) * rm(x2, x);
                    if (!e.is_zero()) cols[static_cast<std::size_t>(v2 * w + y2 * dm + x2)].add(v * w + y * dm + x, c3 * kk * e);
                  }
      }
      ops.push_back(from_columns(f, static_cast<int>(dims[q]), cols));
    }
    fam.ops.push_back(std::move(ops));
  }
  c.add_family(std::move(fam));
  return c;
}

AdjunctionIso adjunction_iso(const std::vector<std::int64_t>& base_dims, const Field& f, int dim_m, int dim_n) {
  AdjunctionIso iso;
  for (std::int64_t base : base_dims) {
    int dim = static_cast<int>(base * dim_m * dim_n);
    SparseMatrix fw(f, dim, dim), bw(f, dim, dim);
    for (std::int64_t v = 0; v < base; ++v)
      for (int y = 0; y < dim_n; ++y)
        for (int x = 0; x < dim_m; ++x) {
          std::int64_t l = v * dim_m * dim_n + y * dim_m + x;
          std::int64_t r = (v * dim_m + x) * dim_n + y;
          fw.set_column(static_cast<int>(l), SparseVec{{{r, f.one()}}});
          bw.set_column(static_cast<int>(r), SparseVec{{{l, f.one()}}});
        }
    iso.forward.push_back(std::move(fw));
    iso.backward.push_back(std::move(bw));
  }
  return iso;
}

AdjunctionIso adjunction_iso(const FreeBimoduleResolution& k, int dim_m, int dim_n, int top) {
  std::vector<std::int64_t> dims;
  for (int q = 0; q <= top; ++q) dims.push_back(k.base_dim(q));
  return adjunction_iso(dims, k.algebra.field(), dim_m, dim_n);
}

std::vector<std::string> AdjunctionIso::check(const ModuleComplex& left, const ModuleComplex& right) const {
  std::vector<std::string> out;
  int top = static_cast<int>(forward.size()) - 1;
  const Field& f = left.field();
  for (int q = 0; q <= top; ++q) {
    if (backward[q] * forward[q] != SparseMatrix::from_dense(Matrix::identity(f, left.dim(q))))
      out.push_back("adjunction round trip fails in degree " + std::to_string(q));
    if (q < top && forward[q + 1] * left.d(q) != right.d(q) * forward[q])
      out.push_back("adjunction is not a chain map in degree " + std::to_string(q));
    if (left.has_family("right:Gamma") && right.has_family("right:Gamma")) {
      const auto& lo = left.family("right:Gamma").ops[q];
      const auto& ro = right.family("right:Gamma").ops[q];
      for (std::size_t g = 0; g < lo.size(); ++g)
        if (forward[q] * lo[g] != ro[g] * forward[q])
          out.push_back("adjunction does not intertwine the Gamma-actions in degree " + std::to_string(q));
    }
  }
  return out;
}

std::vector<std::string> check_augmentation_equivariance(const FreeBimoduleResolution& k, const SmashModule& m) {
  std::vector<std::string> out;
  const Field& f = k.algebra.field();
  const HopfAlgebra& h = m.action.hopf;
  const ModuleAlgebraAction& act = m.action;
  auto rho_a = [&](const SparseVec& a) {
    Matrix r(f, m.dim, m.dim);
    for (const auto& [i, c] : a.terms) r = r + m.of_a(static_cast<int>(i)).scaled(c);
    return r;
  };
  // (a, mu, x) -> rho(a tau(mu)) x
  auto aug = [&](int a, std::int64_t mu, const Vec& x) {
    return rho_a(k.algebra.multiply(SparseVec{{{a, f.one()}}}, k.augmentation[mu])).apply(x);
  };
  for (int g = 0; g < h.dim(); ++g)
    for (int a = 0; a < k.adim(); ++a)
      for (std::int64_t mu = 0; mu < k.base_dim(0); ++mu)
        for (int x = 0; x < m.dim; ++x) {
          Vec ex = unit_vec(f, static_cast<std::size_t>(m.dim), static_cast<std::size_t>(x));
          Vec lhs(static_cast<std::size_t>(m.dim));
          for (const auto& [idx, c] : h.delta(3, g).terms) {
            std::vector<int> gs = h.split(idx, 3);
            Vec gx = m.of_gamma(gs[2]).apply(ex);
            for (const auto& [a2, ca] : act.apply(gs[0], a).terms)
              for (const auto& [mu2, cm] : k.gamma[0][gs[1]].column(static_cast<int>(mu)).terms)
                axpy(lhs, c * ca * cm, aug(static_cast<int>(a2), mu2, gx));
          }
          if (lhs != m.of_gamma(g).apply(aug(a, mu, ex)))
            out.push_back("augmentation is not Gamma-linear at (" + h.algebra().label(g) + ", " +
                          k.algebra.label(a) + ", " + std::to_string(mu) + ", " + std::to_string(x) + ")");
        }
  return out;
}

}  // namespace smashcoh
