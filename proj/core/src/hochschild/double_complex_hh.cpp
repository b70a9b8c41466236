#include "smashcoh/hochschild/double_complex_hh.hpp"

namespace smashcoh {

namespace {

Scalar sign(int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

GammaHomDoubleComplex::GammaHomDoubleComplex(const FreeRightComplex& l, const TensorSquare& t, const LDiagonal& s,
                                             const InnerAlgebra& w, int top)
    : l_(&l), t_(&t), s_(&s), w_(&w), top_(top) {
  if (top > l.length() || top > w.complex().hi())
    throw std::invalid_argument("GammaHomDoubleComplex: inputs are shorter than the requested top");
  const Field& f = w.complex().field();
  std::vector<std::vector<std::int64_t>> dims(static_cast<std::size_t>(top) + 1);
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q) dims[p].push_back(l.base_dim(p) * inner_dim(q));
  DoubleComplex dc(f, top, dims);
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q < top; ++q) {
      std::int64_t dw = inner_dim(q);
      // horizontal: column (b, e) -> sum over b2 with d(b2) containing (b, g)
      std::vector<Accumulator> hcols(static_cast<std::size_t>(dc.dim(p, q)));
      Scalar sh = -sign(p + q);
      for (std::int64_t b2 = 0; b2 < l.base_dim(p + 1); ++b2)
        for (const auto& rt : l.boundary[p + 1][b2]) {
          const SparseMatrix& act = w.right_action(q, rt.g);
          for (std::int64_t e = 0; e < dw; ++e)
            for (const auto& [e2, c] : act.column(static_cast<int>(e)).terms)
              hcols[static_cast<std::size_t>(rt.base * dw + e)].add(b2 * dw + e2, sh * rt.coef * c);
        }
      SparseMatrix h(f, static_cast<int>(dc.dim(p + 1, q)), static_cast<int>(dc.dim(p, q)));
      for (std::size_t i = 0; i < hcols.size(); ++i) h.set_column(static_cast<int>(i), hcols[i].finish());
      dc.dh[p][q] = std::move(h);

      const SparseMatrix& dW = w.complex().d(q);
      std::int64_t dw2 = inner_dim(q + 1);
      SparseMatrix v(f, static_cast<int>(dc.dim(p, q + 1)), static_cast<int>(dc.dim(p, q)));
      Scalar sv = sign(p);
      for (std::int64_t b = 0; b < l.base_dim(p); ++b)
        for (std::int64_t e = 0; e < dw; ++e) {
          SparseVec col;
          for (const auto& [e2, c] : dW.column(static_cast<int>(e)).terms) col.terms.emplace_back(b * dw2 + e2, sv * c);
          v.set_column(static_cast<int>(b * dw + e), std::move(col));
        }
      dc.dv[p][q] = std::move(v);
    }
  total_ = TotalComplex(std::move(dc));
}

std::int64_t GammaHomDoubleComplex::index(int p, int q, std::int64_t b, std::int64_t w) const {
  return total_.offset(p + q, p) + b * inner_dim(q) + w;
}

Vec GammaHomDoubleComplex::product(int n1, const Vec& x, int n2, const Vec& y) const {
  int n = n1 + n2;
  if (n > top_) throw std::out_of_range("GammaHomDoubleComplex::product beyond top");
  Vec out(static_cast<std::size_t>(complex().dim(n)));
  if (is_zero(x) || is_zero(y)) return out;
  for (int p1 = 0; p1 <= n1; ++p1) {
    int q1 = n1 - p1;
    Vec fx = total_.block(n1, p1, x);
    if (is_zero(fx)) continue;
    for (int p2 = 0; p2 <= n2; ++p2) {
      int q2 = n2 - p2;
      Vec gy = total_.block(n2, p2, y);
      if (is_zero(gy)) continue;
      int p = p1 + p2;
      Scalar s = sign(n2 * p1);
      std::int64_t w1 = inner_dim(q1), w2 = inner_dim(q2), w = inner_dim(q1 + q2);
      Vec blk(static_cast<std::size_t>(l_->base_dim(p) * w));
      const SlotLayout& lay = t_->layout(p);
      for (std::int64_t b = 0; b < l_->base_dim(p); ++b) {
        Vec acc(static_cast<std::size_t>(w));
        bool any = false;
        for (const auto& [idx, c] : s_->map[p][b].terms) {
          auto [slot, dg] = lay.decode(idx);
          if (slot != p1) continue;
          Vec u(fx.begin() + dg[0] * w1, fx.begin() + (dg[0] + 1) * w1);
          if (is_zero(u)) continue;
          Vec v(gy.begin() + dg[2] * w2, gy.begin() + (dg[2] + 1) * w2);
          if (is_zero(v)) continue;
          u = w_->right_action(q1, static_cast<int>(dg[1])).apply(u);
          v = w_->right_action(q2, static_cast<int>(dg[3])).apply(v);
          axpy(acc, s * c, w_->product(q1, u, q2, v));
          any = true;
        }
        if (any)
          for (std::int64_t e = 0; e < w; ++e) blk[static_cast<std::size_t>(b * w + e)] = acc[static_cast<std::size_t>(e)];
      }
      total_.add_block(n, p, out, blk);
    }
  }
  return out;
}

Vec double_cochain_from_full(const GammaHomDoubleComplex& dc, const HomAeAlgebra& w, int n, const Vec& full) {
  const FreeRightComplex& l = dc.L();
  const FreeBimoduleResolution& k = w.resolution();
  int gd = l.gdim();
  int db = w.bdim();
  Vec out(static_cast<std::size_t>(dc.complex().dim(n)));
  std::int64_t offset = 0;
  for (int p = 0; p <= n; ++p) {
    int q = n - p;
    std::int64_t inner_full = k.full_dim(q) * db;
    int u = l.hopf.algebra().unit_index();
    for (std::int64_t b = 0; b < l.base_dim(p); ++b) {
      std::vector<Vec> gens;
      for (int g = 0; g < gd; ++g) {
        std::int64_t start = offset + (b * gd + g) * inner_full;
        gens.push_back(w.from_full(q, Vec(full.begin() + start, full.begin() + start + inner_full)));
      }
      for (int g = 0; g < gd; ++g)
        if (gens[g] != w.right_action(q, g).apply(gens[u]))
          throw NotLinear("double cochain of bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not Gamma-linear");
      for (std::int64_t e = 0; e < dc.inner_dim(q); ++e)
        out[static_cast<std::size_t>(dc.index(p, q, b, e))] = gens[u][static_cast<std::size_t>(e)];
    }
    offset += l.base_dim(p) * gd * inner_full;
  }
  return out;
}

XiIsomorphism::XiIsomorphism(const SmashCochains& c, const GammaHomDoubleComplex& dc) : c_(&c), dc_(&dc) {
  const SmashComplex& x = c.source();
  const Field& f = c.complex().field();
  int db = c.bdim();
  int top = std::min(c.complex().hi(), dc.complex().hi());
  for (int n = 0; n <= top; ++n) {
    int dim = c.complex().dim(n);
    if (dim != dc.complex().dim(n)) throw std::invalid_argument("XiIsomorphism: cochain spaces differ in size");
    SparseMatrix xi(f, dim, dim), phi(f, dim, dim);
    const SlotLayout& lay = x.base_layout(n);
    for (std::int64_t v = 0; v < x.base_dim(n); ++v) {
      auto [q, dg] = lay.decode(v);
      int p = n - q;
      Scalar s = sign(p * q);
      for (int e = 0; e < db; ++e) {
        std::int64_t src = v * db + e;
        std::int64_t dst = dc.index(p, q, dg[1], dg[0] * db + e);
        xi.set_column(static_cast<int>(src), SparseVec{{{dst, s}}});
        phi.set_column(static_cast<int>(dst), SparseVec{{{src, s}}});
      }
    }
    xi_.push_back(std::move(xi));
    phi_.push_back(std::move(phi));
  }
}

Vec XiIsomorphism::xi_full(int n, const Vec& theta_full) const { return xi_map(n, c_->from_full(n, theta_full)); }

Vec XiIsomorphism::phi_inverse_full(int n, const HomAeAlgebra& w, const Vec& chi_full) const {
  return phi_inverse(n, double_cochain_from_full(*dc_, w, n, chi_full));
}

std::vector<std::string> XiIsomorphism::check_isomorphism() const {
  std::vector<std::string> out;
  int top = static_cast<int>(xi_.size()) - 1;
  const Field& f = c_->complex().field();
  for (int n = 0; n <= top; ++n) {
    int dim = xi_[n].cols();
    SparseMatrix id = SparseMatrix::from_dense(Matrix::identity(f, dim));
    if (xi_[n] * phi_[n] != id) out.push_back("Xi Phi != id in degree " + std::to_string(n));
    if (phi_[n] * xi_[n] != id) out.push_back("Phi Xi != id in degree " + std::to_string(n));
    if (n < top && dc_->complex().d(n) * xi_[n] != xi_[n + 1] * c_->complex().d(n))
      out.push_back("Xi is not a chain map in degree " + std::to_string(n));
  }
  return out;
}

std::vector<std::string> XiIsomorphism::check_multiplicative(int max_total, std::size_t max_failures) const {
  std::vector<std::string> out;
  const Field& f = c_->complex().field();
  for (int n1 = 0; n1 <= max_total; ++n1)
    for (int n2 = 0; n1 + n2 <= max_total; ++n2) {
      int d1 = c_->complex().dim(n1), d2 = c_->complex().dim(n2);
      std::vector<Vec> ys;
      for (int j = 0; j < d2; ++j) ys.push_back(unit_vec(f, static_cast<std::size_t>(d2), static_cast<std::size_t>(j)));
      std::vector<Vec> xi_ys;
      for (const auto& y : ys) xi_ys.push_back(xi_map(n2, y));
      for (int i = 0; i < d1; ++i) {
        Vec x = unit_vec(f, static_cast<std::size_t>(d1), static_cast<std::size_t>(i));
        Vec xi_x = xi_map(n1, x);
        for (int j = 0; j < d2; ++j) {
          if (xi_map(n1 + n2, c_->product(n1, x, n2, ys[j])) != dc_->product(n1, xi_x, n2, xi_ys[j])) {
            out.push_back("Xi is not multiplicative on basis pair (" + std::to_string(n1) + ":" + std::to_string(i) +
                          ", " + std::to_string(n2) + ":" + std::to_string(j) + ")");
            if (out.size() >= max_failures) return out;
          }
        }
      }
    }
  return out;
}

}  // namespace smashcoh
