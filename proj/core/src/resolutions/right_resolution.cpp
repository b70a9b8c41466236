#include "smashcoh/resolutions/right_resolution.hpp"

#include <stdexcept>

namespace smashcoh {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int require_unit(const HopfAlgebra& h) {
  int u = h.algebra().unit_index();
  if (u < 0) throw std::invalid_argument("the unit of Gamma must be a basis vector");
  return u;
}

std::string deg_msg(const char* what, int p, std::int64_t x) {
  return std::string(what) + " at degree " + std::to_string(p) + " element " + std::to_string(x);
}

}  // namespace

std::int64_t FreeRightComplex::base_dim(int p) const {
  if (p < 0 || p > length()) return 0;
  return base_dims[static_cast<std::size_t>(p)];
}

SparseVec FreeRightComplex::differential_full(int p, std::int64_t x) const {
  std::int64_t b = x / gdim();
  int h = static_cast<int>(x % gdim());
  Accumulator acc;
  for (const auto& t : boundary[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)])
    for (const auto& [k, c] : hopf.algebra().product(t.g, h).terms) acc.add(t.base * gdim() + k, t.coef * c);
  return acc.finish();
}

SparseVec FreeRightComplex::right_act(const SparseVec& v, int g) const {
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    std::int64_t b = x / gdim();
    int h = static_cast<int>(x % gdim());
    for (const auto& [k, ck] : hopf.algebra().product(h, g).terms) acc.add(b * gdim() + k, c * ck);
  }
  return acc.finish();
}

FreeSource FreeRightComplex::free_source() const {
  FreeSource s;
  s.base_dims = base_dims;
  int u = hopf.algebra().unit_index();
  s.boundary = [this, u](int p, std::int64_t b) {
    std::vector<FreeTerm> out;
    for (const auto& t : boundary[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)])
      out.push_back(FreeTerm{t.base, -1, t.g == u ? -1 : t.g, t.coef});
    return out;
  };
  return s;
}

FreeRightComplex trivial_module_resolution(const HopfAlgebra& h, int length) {
  if (length < 0) throw std::invalid_argument("trivial_module_resolution: negative length");
  int u = require_unit(h);
  const std::int64_t d = h.dim();
  const Field& f = h.field();
  FreeRightComplex l;
  l.hopf = h;
  for (int p = 0; p <= length; ++p) l.base_dims.push_back(ipow(d, p));
  l.boundary.resize(static_cast<std::size_t>(length) + 1);
  for (int p = 1; p <= length; ++p) {
    for (std::int64_t b = 0; b < l.base_dims[p]; ++b) {
      std::vector<std::int64_t> w(static_cast<std::size_t>(p));
      std::int64_t rest = b;
      for (int i = p; i-- > 0;) {
        w[i] = rest % d;
        rest /= d;
      }
      auto index_of = [&](const std::vector<std::int64_t>& v, std::size_t from, std::size_t to) {
        std::int64_t m = 0;
        for (std::size_t i = from; i < to; ++i) m = m * d + v[i];
        return m;
      };
      std::vector<RightTerm> terms;
      const Scalar& e = h.counit()[w[0]];
      if (!e.is_zero()) terms.push_back({index_of(w, 1, w.size()), u, e});
      for (int i = 1; i < p; ++i) {
        Scalar sign = i % 2 == 0 ? f.one() : -f.one();
        for (const auto& [k, c] : h.algebra().product(static_cast<int>(w[i - 1]), static_cast<int>(w[i])).terms) {
          std::vector<std::int64_t> w2;
          for (int j = 0; j < p; ++j) {
            if (j == i) continue;
            w2.push_back(j == i - 1 ? k : w[j]);
          }
          terms.push_back({index_of(w2, 0, w2.size()), u, sign * c});
        }
      }
      terms.push_back({index_of(w, 0, w.size() - 1), static_cast<int>(w.back()), p % 2 == 0 ? f.one() : -f.one()});
      l.boundary[p].push_back(std::move(terms));
    }
  }
  return l;
}

ModuleComplex right_complex(const FreeRightComplex& l, bool augmented) {
  const Field& f = l.hopf.field();
  int lo = augmented ? -1 : 0;
  std::vector<std::int64_t> dims;
  if (augmented) dims.push_back(1);
  for (int p = 0; p <= l.length(); ++p) dims.push_back(l.full_dim(p));
  ModuleComplex c(f, lo, dims, -1);
  for (int p = augmented ? 0 : 1; p <= l.length(); ++p) {
    SparseMatrix d(f, c.dim(p - 1), c.dim(p));
    for (std::int64_t x = 0; x < l.full_dim(p); ++x) {
      if (p == 0) {
        const Scalar& e = l.hopf.counit()[x % l.gdim()];
        if (!e.is_zero()) d.set_column(static_cast<int>(x), SparseVec{{{0, e}}});
      } else {
        d.set_column(static_cast<int>(x), l.differential_full(p, x));
      }
    }
    c.set_differential(p, std::move(d));
  }
  ActionFamily fam{"right:Gamma", {}};
  for (int n = lo; n <= l.length(); ++n) {
    std::vector<SparseMatrix> ops;
    for (int g = 0; g < l.gdim(); ++g) {
      SparseMatrix m(f, c.dim(n), c.dim(n));
      for (int x = 0; x < c.dim(n); ++x) {
        if (n < 0) {
          const Scalar& e = l.hopf.counit()[g];
          if (!e.is_zero()) m.set_column(x, SparseVec{{{0, e}}});
        } else {
          m.set_column(x, l.right_act(SparseVec{{{x, f.one()}}}, g));
        }
      }
      ops.push_back(std::move(m));
    }
    fam.ops.push_back(std::move(ops));
  }
  c.add_family(std::move(fam));
  c.trusted_hi = l.length() - 1;
  return c;
}

TensorSquare::TensorSquare(const FreeRightComplex& l, int top) : l_(&l), top_(top) {
  if (top > l.length()) throw std::invalid_argument("TensorSquare: resolution too short");
  for (int n = 0; n <= top; ++n) {
    SlotLayout s;
    for (int i = 0; i <= n; ++i) s.add_slot({l.base_dim(i), l.gdim(), l.base_dim(n - i), l.gdim()});
    layouts_.push_back(std::move(s));
  }
}

SparseVec TensorSquare::differential_full(int n, std::int64_t x) const {
  const FreeRightComplex& l = *l_;
  const std::int64_t d = l.gdim();
  auto [i, w] = layout(n).decode(x);
  Accumulator acc;
  if (i >= 1)
    for (const auto& [y, c] : l.differential_full(i, w[0] * d + w[1]).terms)
      acc.add(layout(n - 1).encode(i - 1, {y / d, y % d, w[2], w[3]}), c);
  if (n - i >= 1) {
    Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (const auto& [y, c] : l.differential_full(n - i, w[2] * d + w[3]).terms)
      acc.add(layout(n - 1).encode(i, {w[0], w[1], y / d, y % d}), sign * c);
  }
  return acc.finish();
}

SparseMatrix TensorSquare::differential(int n) const {
  SparseMatrix m(l_->hopf.field(), static_cast<int>(dim(n - 1)), static_cast<int>(dim(n)));
  for (std::int64_t x = 0; x < dim(n); ++x) m.set_column(static_cast<int>(x), differential_full(n, x));
  return m;
}

SparseVec TensorSquare::right_act(int n, const SparseVec& v, int g) const {
  const HopfAlgebra& h = l_->hopf;
  const FinDimAlgebra& alg = h.algebra();
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    auto [i, w] = layout(n).decode(x);
    for (const auto& [idx, cg] : h.coproduct(g).terms) {
      int g1 = static_cast<int>(idx / h.dim()), g2 = static_cast<int>(idx % h.dim());
      for (const auto& [k1, c1] : alg.product(static_cast<int>(w[1]), g1).terms)
        for (const auto& [k2, c2] : alg.product(static_cast<int>(w[3]), g2).terms)
          acc.add(layout(n).encode(i, {w[0], k1, w[2], k2}), c * cg * c1 * c2);
    }
  }
  return acc.finish();
}

Scalar TensorSquare::augmentation(const SparseVec& v) const {
  const Vec& e = l_->hopf.counit();
  Scalar s = l_->hopf.field().zero();
  for (const auto& [x, c] : v.terms) {
    auto [i, w] = layout(0).decode(x);
    s += c * e[w[1]] * e[w[3]];
  }
  return s;
}

LiftTarget TensorSquare::lift_target() const {
  LiftTarget t;
  t.d = [this](int n) { return differential(n); };
  t.act = [this](int n, const SparseVec& v, int l, int r) {
    if (l >= 0) throw std::logic_error("TensorSquare: no left action");
    return r < 0 ? v : right_act(n, v, r);
  };
  return t;
}

LDiagonal sigma_alexander_whitney(const TensorSquare& t) {
  const FreeRightComplex& l = t.source();
  const auto& grp = l.hopf.group();
  if (!grp) throw std::invalid_argument("Alexander-Whitney diagonal needs a group algebra");
  const std::int64_t d = l.gdim();
  const std::int64_t e = grp->identity();
  LDiagonal s{"alexander-whitney", {}};
  for (int p = 0; p <= t.top(); ++p) {
    s.map.emplace_back();
    for (std::int64_t b = 0; b < l.base_dim(p); ++b) {
      std::vector<std::int64_t> w(static_cast<std::size_t>(p));
      std::int64_t rest = b;
      for (int i = p; i-- > 0;) {
        w[i] = rest % d;
        rest /= d;
      }
      Accumulator acc;
      for (int i = 0; i <= p; ++i) {
        std::int64_t first = 0, second = 0;
        int prod = static_cast<int>(e);
        for (int j = 0; j < i; ++j) first = first * d + w[j];
        for (int j = i; j < p; ++j) {
          second = second * d + w[j];
          prod = grp->mul(prod, static_cast<int>(w[j]));
        }
        acc.add(t.layout(p).encode(i, {first, prod, second, e}), Scalar(1));
      }
      s.map[p].push_back(acc.finish());
    }
  }
  return s;
}

LDiagonal sigma_lifted(const TensorSquare& t) {
  const FreeRightComplex& l = t.source();
  int u = require_unit(l.hopf);
  std::vector<SparseVec> degree0{SparseVec{{{t.layout(0).encode(0, {0, u, 0, u}), Scalar(1)}}}};
  return {"lifted", lift_chain_map(l.free_source(), t.lift_target(), std::move(degree0), t.top())};
}

SparseVec sigma_full(const TensorSquare& t, const LDiagonal& s, int p, const SparseVec& v) {
  const std::int64_t d = t.source().gdim();
  Accumulator acc;
  for (const auto& [x, c] : v.terms) acc.add(t.right_act(p, s.map[p][x / d], static_cast<int>(x % d)), c);
  return acc.finish();
}

std::vector<std::string> check_sigma(const TensorSquare& t, const LDiagonal& s) {
  std::vector<std::string> out;
  const FreeRightComplex& l = t.source();
  for (int h = 0; h < l.gdim(); ++h) {
    SparseVec img = sigma_full(t, s, 0, SparseVec{{{h, Scalar(1)}}});
    if (t.augmentation(img) != l.hopf.counit()[h]) out.push_back(deg_msg("xi compatibility fails", 0, h));
  }
  for (int p = 1; p <= t.top(); ++p)
    for (std::int64_t x = 0; x < l.full_dim(p); ++x) {
      SparseVec sx = sigma_full(t, s, p, SparseVec{{{x, Scalar(1)}}});
      Accumulator lhs;
      for (const auto& [y, c] : sx.terms) lhs.add(t.differential_full(p, y), c);
      if (lhs.finish() != sigma_full(t, s, p - 1, l.differential_full(p, x)))
        out.push_back(deg_msg("sigma is not a chain map", p, x));
    }
  return out;
}

namespace induced {

SparseVec iota(const HopfAlgebra& h, std::int64_t r, std::int64_t b, int g) {
  const std::int64_t d = h.dim();
  Accumulator acc;
  for (const auto& [idx, c] : h.coproduct(g).terms)
    for (const auto& [s, cs] : h.S(static_cast<int>(idx / d)).terms) acc.add((s * r + b) * d + idx % d, c * cs);
  return acc.finish();
}

SparseVec left(const HopfAlgebra& h, std::int64_t r, const SparseVec& v, int g) {
  const std::int64_t d = h.dim();
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    std::int64_t g1 = x / (r * d), rest = x % (r * d);
    for (const auto& [k, ck] : h.algebra().product(g, static_cast<int>(g1)).terms) acc.add(k * r * d + rest, c * ck);
  }
  return acc.finish();
}

SparseVec right(const HopfAlgebra& h, std::int64_t r, const SparseVec& v, int g) {
  (void)r;
  const std::int64_t d = h.dim();
  Accumulator acc;
  for (const auto& [x, c] : v.terms)
    for (const auto& [k, ck] : h.algebra().product(static_cast<int>(x % d), g).terms) acc.add(x - x % d + k, c * ck);
  return acc.finish();
}

SparseVec coaction(const HopfAlgebra& h, std::int64_t r, std::int64_t x) {
  const std::int64_t d = h.dim();
  const std::int64_t m = d * r * d;
  int g2 = static_cast<int>(x % d);
  std::int64_t b = (x / d) % r;
  int g1 = static_cast<int>(x / (d * r));
  Accumulator acc;
  for (const auto& [i1, c1] : h.coproduct(g1).terms)
    for (const auto& [i2, c2] : h.coproduct(g2).terms)
      for (const auto& [k, ck] : h.algebra().product(static_cast<int>(i1 / d), static_cast<int>(i2 / d)).terms)
        acc.add(k * m + ((i1 % d) * r + b) * d + i2 % d, c1 * c2 * ck);
  return acc.finish();
}

SparseMatrix induce_map(const HopfAlgebra& h, std::int64_t r, std::int64_t s,
                        const std::vector<std::vector<RightTerm>>& images) {
  const std::int64_t d = h.dim();
  std::vector<SparseVec> base(static_cast<std::size_t>(r));
  for (std::int64_t b = 0; b < r; ++b) {
    Accumulator acc;
    for (const auto& t : images[b]) acc.add(iota(h, s, t.base, t.g), t.coef);
    base[b] = acc.finish();
  }
  SparseMatrix m(h.field(), static_cast<int>(d * s * d), static_cast<int>(d * r * d));
  for (std::int64_t g1 = 0; g1 < d; ++g1)
    for (std::int64_t b = 0; b < r; ++b)
      for (std::int64_t g2 = 0; g2 < d; ++g2)
        m.set_column(static_cast<int>((g1 * r + b) * d + g2),
                     right(h, s, left(h, s, base[b], static_cast<int>(g1)), static_cast<int>(g2)));
  return m;
}

}  // namespace induced

InducedComplex::InducedComplex(const FreeRightComplex& l) : l_(&l) {
  diffs_.emplace_back();
  for (int p = 1; p <= l.length(); ++p)
    diffs_.push_back(induced::induce_map(l.hopf, l.base_dim(p), l.base_dim(p - 1), l.boundary[p]));
}

std::int64_t InducedComplex::dim(int p) const {
  return static_cast<std::int64_t>(l_->gdim()) * l_->base_dim(p) * l_->gdim();
}

std::int64_t InducedComplex::index(int p, int g, std::int64_t b, int g2) const {
  return (g * l_->base_dim(p) + b) * l_->gdim() + g2;
}

void InducedComplex::decode(int p, std::int64_t x, int& g, std::int64_t& b, int& g2) const {
  const std::int64_t d = l_->gdim();
  g2 = static_cast<int>(x % d);
  b = (x / d) % l_->base_dim(p);
  g = static_cast<int>(x / (d * l_->base_dim(p)));
}

SparseVec InducedComplex::differential_full(int p, std::int64_t x) const {
  return diffs_[static_cast<std::size_t>(p)].column(static_cast<int>(x));
}

SparseVec InducedComplex::embed(int p, const SparseVec& v) const {
  const std::int64_t d = l_->gdim();
  Accumulator acc;
  for (const auto& [x, c] : v.terms)
    acc.add(induced::iota(l_->hopf, l_->base_dim(p), x / d, static_cast<int>(x % d)), c);
  return acc.finish();
}

SparseVec InducedComplex::coaction(int p, std::int64_t x) const {
  return induced::coaction(l_->hopf, l_->base_dim(p), x);
}

SparseVec InducedComplex::xi_up(std::int64_t x) const {
  int g, g2;
  std::int64_t b;
  decode(0, x, g, b, g2);
  return l_->hopf.algebra().product(g, g2);
}

ModuleComplex InducedComplex::to_complex(bool augmented) const {
  const HopfAlgebra& h = l_->hopf;
  const Field& f = h.field();
  int lo = augmented ? -1 : 0;
  std::vector<std::int64_t> dims;
  if (augmented) dims.push_back(h.dim());
  for (int p = 0; p <= length(); ++p) dims.push_back(dim(p));
  ModuleComplex c(f, lo, dims, -1);
  if (augmented) {
    SparseMatrix d(f, h.dim(), static_cast<int>(dim(0)));
    for (std::int64_t x = 0; x < dim(0); ++x) d.set_column(static_cast<int>(x), xi_up(x));
    c.set_differential(0, std::move(d));
  }
  for (int p = 1; p <= length(); ++p) c.set_differential(p, diffs_[p]);
  for (int side = 0; side < 2; ++side) {
    ActionFamily fam{side == 0 ? "left:Gamma" : "right:Gamma", {}};
    for (int n = lo; n <= length(); ++n) {
      std::vector<SparseMatrix> ops;
      for (int g = 0; g < h.dim(); ++g) {
        SparseMatrix m(f, c.dim(n), c.dim(n));
        for (int x = 0; x < c.dim(n); ++x) {
          if (n < 0) {
            m.set_column(x, side == 0 ? h.algebra().product(g, x) : h.algebra().product(x, g));
          } else {
            SparseVec e{{{x, f.one()}}};
            m.set_column(x, side == 0 ? induced::left(h, l_->base_dim(n), e, g)
                                      : induced::right(h, l_->base_dim(n), e, g));
          }
        }
        ops.push_back(std::move(m));
      }
      fam.ops.push_back(std::move(ops));
    }
    c.add_family(std::move(fam));
  }
  c.trusted_hi = length() - 1;
  return c;
}

InducedSquare::InducedSquare(const InducedComplex& up, int top) : up_(&up) {
  if (top > up.length()) throw std::invalid_argument("InducedSquare: complex too short");
  const std::int64_t d = up.hopf().dim();
  for (int n = 0; n <= top; ++n) {
    SlotLayout s;
    for (int i = 0; i <= n; ++i) s.add_slot({d, up.source().base_dim(i), d, up.source().base_dim(n - i), d});
    layouts_.push_back(std::move(s));
  }
}

SparseVec InducedSquare::differential_full(int n, std::int64_t x) const {
  const InducedComplex& up = *up_;
  const FinDimAlgebra& alg = up.hopf().algebra();
  auto [i, w] = layout(n).decode(x);
  Accumulator acc;
  if (i >= 1)
    for (const auto& [y, c] :
         up.differential_full(i, up.index(i, static_cast<int>(w[0]), w[1], static_cast<int>(w[2]))).terms) {
      int a, b2;
      std::int64_t b;
      up.decode(i - 1, y, a, b, b2);
      acc.add(layout(n - 1).encode(i - 1, {a, b, b2, w[3], w[4]}), c);
    }
  if (n - i >= 1) {
    Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
    int u = alg.unit_index();
    for (const auto& [y, c] : up.differential_full(n - i, up.index(n - i, u, w[3], static_cast<int>(w[4]))).terms) {
      int a, b2;
      std::int64_t b;
      up.decode(n - i - 1, y, a, b, b2);
      for (const auto& [k, ck] : alg.product(static_cast<int>(w[2]), a).terms)
        acc.add(layout(n - 1).encode(i, {w[0], w[1], k, b, b2}), sign * c * ck);
    }
  }
  return acc.finish();
}

SparseVec InducedSquare::left(int n, const SparseVec& v, int g) const {
  const FinDimAlgebra& alg = up_->hopf().algebra();
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    auto [i, w] = layout(n).decode(x);
    for (const auto& [k, ck] : alg.product(g, static_cast<int>(w[0])).terms)
      acc.add(layout(n).encode(i, {k, w[1], w[2], w[3], w[4]}), c * ck);
  }
  return acc.finish();
}

SparseVec InducedSquare::right(int n, const SparseVec& v, int g) const {
  const FinDimAlgebra& alg = up_->hopf().algebra();
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    auto [i, w] = layout(n).decode(x);
    for (const auto& [k, ck] : alg.product(static_cast<int>(w[4]), g).terms)
      acc.add(layout(n).encode(i, {w[0], w[1], w[2], w[3], k}), c * ck);
  }
  return acc.finish();
}

SparseVec InducedSquare::coaction(int n, std::int64_t x) const {
  const HopfAlgebra& h = up_->hopf();
  const FinDimAlgebra& alg = h.algebra();
  const std::int64_t d = h.dim();
  auto [i, w] = layout(n).decode(x);
  Accumulator acc;
  for (const auto& [i0, c0] : h.coproduct(static_cast<int>(w[0])).terms)
    for (const auto& [i2, c2] : h.coproduct(static_cast<int>(w[2])).terms)
      for (const auto& [i4, c4] : h.coproduct(static_cast<int>(w[4])).terms) {
        SparseVec left_factor = alg.multiply(alg.product(static_cast<int>(i0 / d), static_cast<int>(i2 / d)),
                                             SparseVec{{{i4 / d, Scalar(1)}}});
        std::int64_t y = layout(n).encode(i, {i0 % d, w[1], i2 % d, w[3], i4 % d});
        for (const auto& [k, ck] : left_factor.terms) acc.add(k * dim(n) + y, c0 * c2 * c4 * ck);
      }
  return acc.finish();
}

SparseVec InducedSquare::augmentation(std::int64_t x) const {
  const FinDimAlgebra& alg = up_->hopf().algebra();
  auto [i, w] = layout(0).decode(x);
  return alg.multiply(alg.product(static_cast<int>(w[0]), static_cast<int>(w[2])), SparseVec{{{w[4], Scalar(1)}}});
}

SparseVec InducedSquare::embed_pair(const TensorSquare& t, int n, const SparseVec& v) const {
  const HopfAlgebra& h = up_->hopf();
  const FreeRightComplex& l = up_->source();
  const FinDimAlgebra& alg = h.algebra();
  Accumulator acc;
  for (const auto& [x, c] : v.terms) {
    auto [i, w] = t.layout(n).decode(x);
    SparseVec x1 = induced::iota(h, l.base_dim(i), w[0], static_cast<int>(w[1]));
    SparseVec x2 = induced::iota(h, l.base_dim(n - i), w[2], static_cast<int>(w[3]));
    for (const auto& [y1, c1] : x1.terms) {
      int a1, e1;
      std::int64_t b1;
      up_->decode(i, y1, a1, b1, e1);
      for (const auto& [y2, c2] : x2.terms) {
        int a2, e2;
        std::int64_t b2;
        up_->decode(n - i, y2, a2, b2, e2);
        for (const auto& [k, ck] : alg.product(e1, a2).terms)
          acc.add(layout(n).encode(i, {a1, b1, k, b2, e2}), c * c1 * c2 * ck);
      }
    }
  }
  return acc.finish();
}

SparseVec InducedSquare::sigma_up(const TensorSquare& t, const LDiagonal& s, int p, std::int64_t x) const {
  int g, g2;
  std::int64_t b;
  up_->decode(p, x, g, b, g2);
  return right(p, left(p, embed_pair(t, p, s.map[p][b]), g), g2);
}

std::vector<std::string> check_sigma_up(const InducedComplex& up, const InducedSquare& sq, const TensorSquare& t,
                                        const LDiagonal& s, int top) {
  std::vector<std::string> out;
  const HopfAlgebra& h = up.hopf();
  const std::int64_t d = h.dim();
  auto sigma_vec = [&](int p, const SparseVec& v) {
    Accumulator acc;
    for (const auto& [x, c] : v.terms) acc.add(sq.sigma_up(t, s, p, x), c);
    return acc.finish();
  };
  for (int p = 0; p <= top; ++p)
    for (std::int64_t x = 0; x < up.dim(p); ++x) {
      SparseVec img = sq.sigma_up(t, s, p, x);
      if (p == 0) {
        Accumulator acc;
        for (const auto& [y, c] : img.terms) acc.add(sq.augmentation(y), c);
        if (acc.finish() != up.xi_up(x)) out.push_back(deg_msg("xi^ compatibility fails", p, x));
      } else {
        Accumulator lhs;
        for (const auto& [y, c] : img.terms) lhs.add(sq.differential_full(p, y), c);
        if (lhs.finish() != sigma_vec(p - 1, up.differential_full(p, x)))
          out.push_back(deg_msg("sigma^ is not a chain map", p, x));
      }
      Accumulator rho_lhs, rho_rhs;
      for (const auto& [y, c] : img.terms) rho_lhs.add(sq.coaction(p, y), c);
      for (const auto& [y, c] : up.coaction(p, x).terms) {
        std::int64_t k = y / up.dim(p), rest = y % up.dim(p);
        for (const auto& [z, cz] : sq.sigma_up(t, s, p, rest).terms) rho_rhs.add(k * sq.dim(p) + z, c * cz);
      }
      if (rho_lhs.finish() != rho_rhs.finish()) out.push_back(deg_msg("sigma^ is not colinear", p, x));
      for (int g = 0; g < d; ++g) {
        SparseVec gx = induced::left(h, up.source().base_dim(p), SparseVec{{{x, Scalar(1)}}}, g);
        if (sigma_vec(p, gx) != sq.left(p, img, g)) out.push_back(deg_msg("sigma^ is not left linear", p, x));
      }
    }
  for (int p = 0; p <= top; ++p)
    for (std::int64_t x = 0; x < up.source().full_dim(p); ++x) {
      SparseVec e{{{x, Scalar(1)}}};
      if (sigma_vec(p, up.embed(p, e)) != sq.embed_pair(t, p, sigma_full(t, s, p, e)))
        out.push_back(deg_msg("sigma^ does not restrict to sigma", p, x));
    }
  return out;
}

}  // namespace smashcoh
