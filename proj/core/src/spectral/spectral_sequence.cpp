#include "smashcoh/spectral/spectral_sequence.hpp"

#include <sstream>

namespace smashcoh {

namespace {

Scalar sign(int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

Vec combine(const std::vector<Vec>& reps, const Vec& a, std::size_t dim) {
  Vec x(dim);
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (!a[i].is_zero()) axpy(x, a[i], reps[i]);
  return x;
}

std::string slot_name(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

}  // namespace

int SpectralPage::dim(int s, int t) const {
  auto it = slots.find({s, t});
  return it == slots.end() ? 0 : it->second.dim();
}

SpectralSequence::SpectralSequence(const TotalComplex& tot, const DgAlgebra* alg, Filtration which, int r_max,
                                   int maxdeg)
    : tot_(&tot), alg_(alg), which_(which), maxdeg_(maxdeg) {
  if (r_max < 1) throw std::invalid_argument("SpectralSequence: r_max must be at least 1");
  if (tot.top() < maxdeg + 2)
    throw std::invalid_argument("SpectralSequence: total complex must reach degree maxdeg + 2");
  const ModuleComplex& c = tot.complex();
  const Field& f = c.field();
  for (int r = 1; r <= r_max; ++r) {
    SpectralPage page;
    page.r = r;
    for (int n = 0; n <= maxdeg + 1; ++n)
      for (int s = 0; s <= n; ++s) {
        Subspace denom = z(r - 1, s + 1, n);
        if (n >= 1) {
          std::vector<SparseVec> im;
          for (const auto& v : z(r - 1, s - r + 1, n - 1).sparse_basis()) im.push_back(c.d(n - 1).apply(v));
          denom = denom.sum(Subspace::span(f, c.dim(n), std::move(im)));
        }
        const Subspace& cyc = z(r, s, n);
        page.slots.emplace(std::pair{s, n - s}, PageSlot{cyc, denom, quotient_data(cyc, denom)});
      }
    for (int n = 0; n <= maxdeg; ++n)
      for (int s = 0; s <= n; ++s) {
        int t = n - s;
        const PageSlot& src = page.slots.at({s, t});
        auto tgt = page.slots.find({s + r, t - r + 1});
        int rows = tgt == page.slots.end() ? 0 : tgt->second.dim();
        Matrix d(f, rows, src.dim());
        for (int i = 0; i < src.dim(); ++i) {
          Vec img = c.d(n).apply(src.quotient.representatives[i]);
          if (tgt == page.slots.end()) {
            if (!is_zero(img)) throw std::logic_error("spectral: d_r leaves the first quadrant");
            continue;
          }
          d.set_col(i, tgt->second.quotient.project(img));
        }
        page.d.emplace(std::pair{s, t}, std::move(d));
      }
    pages_.push_back(std::move(page));
  }
}

const Subspace& SpectralSequence::z(int r, int s, int n) {
  // F^s is everything for s <= 0, but the condition D x in F^{s+r} still depends on s
  s = std::max(s, -r);
  auto key = std::tuple{r, s, n};
  if (auto it = zcache_.find(key); it != zcache_.end()) return it->second;
  const ModuleComplex& c = tot_->complex();
  const Field& f = c.field();
  int dim = c.dim(n);
  Subspace out(f, dim);
  if (s <= n) {
    std::vector<int> cols;
    for (int i = 0; i < dim; ++i)
      if (tot_->level(n, i, which_) >= std::max(s, 0)) cols.push_back(i);
    const SparseMatrix& d = c.d(n);
    std::vector<int> row_index(static_cast<std::size_t>(d.rows()), -1);
    int nrows = 0;
    for (int i = 0; i < d.rows(); ++i)
      if (tot_->level(n + 1, i, which_) < s + r) row_index[i] = nrows++;
    SparseMatrix sub(f, nrows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      SparseVec col;
      for (const auto& [i, v] : d.column(cols[j]).terms)
        if (row_index[i] >= 0) col.terms.emplace_back(row_index[i], v);
      sub.set_column(static_cast<int>(j), std::move(col));
    }
    std::vector<SparseVec> basis;
    Subspace ker = kernel_basis(sub);
    for (const auto& v : ker.sparse_basis()) {
      SparseVec full;
      for (const auto& [i, x] : v.terms) full.terms.emplace_back(cols[static_cast<std::size_t>(i)], x);
      basis.push_back(std::move(full));
    }
    out = Subspace::span(f, dim, std::move(basis));
  }
  return zcache_.emplace(key, std::move(out)).first->second;
}

const SpectralPage& SpectralSequence::page(int r) const {
  if (r < 1 || r > r_max()) throw std::out_of_range("spectral: page " + std::to_string(r) + " not computed");
  return pages_[static_cast<std::size_t>(r - 1)];
}

const PageSlot& SpectralSequence::einfty(int s, int t) const {
  int r = stable_page(s, t);
  if (r > r_max())
    throw NotStabilized("E_inf at " + slot_name(s, t) + " needs page " + std::to_string(r) + ", only " +
                        std::to_string(r_max()) + " computed");
  return page(r).slots.at({s, t});
}

Vec SpectralSequence::lift(int r, int s, int t, const Vec& a) const {
  const PageSlot& slot = page(r).slots.at({s, t});
  return combine(slot.quotient.representatives, a, static_cast<std::size_t>(tot_->complex().dim(s + t)));
}

Vec SpectralSequence::product(int r, int s1, int t1, const Vec& a, int s2, int t2, const Vec& b) const {
  if (!alg_) throw std::logic_error("spectral: no product attached");
  int n1 = s1 + t1, n2 = s2 + t2;
  auto it = page(r).slots.find({s1 + s2, t1 + t2});
  if (it == page(r).slots.end()) throw std::out_of_range("spectral: product beyond the computed range");
  return it->second.quotient.project(alg_->product(n1, lift(r, s1, t1, a), n2, lift(r, s2, t2, b)));
}

Vec SpectralSequence::differential(int r, int s, int t, const Vec& a) const {
  return page(r).d.at({s, t}).apply(a);
}

std::vector<std::string> SpectralSequence::check_pages(std::size_t max_failures) const {
  std::vector<std::string> out;
  auto fail = [&](const std::string& m) {
    out.push_back(m);
    return out.size() >= max_failures;
  };
  const Field& f = tot_->complex().field();
  std::uint64_t state = 0x5eed;
  for (int r = 1; r <= r_max(); ++r) {
    const SpectralPage& pg = page(r);
    std::string tag = "E_" + std::to_string(r) + " ";
    for (const auto& [key, d] : pg.d) {
      auto [s, t] = key;
      auto next = pg.d.find({s + r, t - r + 1});
      if (next != pg.d.end() && !(next->second * d).is_zero() && fail(tag + "d_r d_r != 0 at " + slot_name(s, t)))
        return out;
      if (r < r_max()) {
        int rin = 0;
        if (auto in = pg.d.find({s - r, t + r - 1}); in != pg.d.end()) rin = rank(in->second);
        int expect = pg.dim(s, t) - rank(d) - rin;
        if (page(r + 1).dim(s, t) != expect &&
            fail(tag + "H(E_r) != E_{r+1} at " + slot_name(s, t) + ": " + std::to_string(page(r + 1).dim(s, t)) +
                 " vs " + std::to_string(expect)))
          return out;
      }
    }
    if (!alg_) continue;
    for (const auto& [k1, sl1] : pg.slots)
      for (const auto& [k2, sl2] : pg.slots) {
        auto [s1, t1] = k1;
        auto [s2, t2] = k2;
        int n1 = s1 + t1, n2 = s2 + t2;
        if (n1 + n2 > maxdeg_) continue;
        const PageSlot& tgt = pg.slots.at({s1 + s2, t1 + t2});
        for (int i = 0; i < sl1.dim(); ++i)
          for (int j = 0; j < sl2.dim(); ++j) {
            const Vec& x = sl1.quotient.representatives[i];
            const Vec& y = sl2.quotient.representatives[j];
            Vec xy = alg_->product(n1, x, n2, y);
            std::string where = slot_name(s1, t1) + ":" + std::to_string(i) + " * " + slot_name(s2, t2) + ":" +
                                std::to_string(j);
            if (!tgt.cycles.contains(xy)) {
              if (fail(tag + "product of representatives leaves Z_r at " + where)) return out;
              continue;
            }
            Vec cls = tgt.quotient.project(xy);
            // perturb both representatives by random denominator elements
            Vec px = x, py = y;
            for (const auto& v : sl1.denominator.sparse_basis()) axpy(px, random_vector(f, 1, state)[0], v.to_dense(x.size()));
            for (const auto& v : sl2.denominator.sparse_basis()) axpy(py, random_vector(f, 1, state)[0], v.to_dense(y.size()));
            if (tgt.quotient.project(alg_->product(n1, px, n2, py)) != cls &&
                fail(tag + "product depends on representatives at " + where))
              return out;
            Vec ei = unit_vec(f, static_cast<std::size_t>(sl1.dim()), static_cast<std::size_t>(i));
            Vec ej = unit_vec(f, static_cast<std::size_t>(sl2.dim()), static_cast<std::size_t>(j));
            Vec lhs = differential(r, s1 + s2, t1 + t2, cls);
            Vec rhs(lhs.size());
            if (pg.slots.count({s1 + r, t1 - r + 1}))
              axpy(rhs, Scalar(1), product(r, s1 + r, t1 - r + 1, differential(r, s1, t1, ei), s2, t2, ej));
            if (pg.slots.count({s2 + r, t2 - r + 1}))
              axpy(rhs, sign(n1), product(r, s1, t1, ei, s2 + r, t2 - r + 1, differential(r, s2, t2, ej)));
            if (lhs != rhs && fail(tag + "d_r is not a derivation at " + where)) return out;
          }
      }
  }
  return out;
}

std::vector<std::vector<int>> SpectralSequence::table(int r) const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(maxdeg_ + 1));
  for (int p = 0; p <= maxdeg_; ++p)
    for (int q = 0; p + q <= maxdeg_; ++q) {
      auto [s, t] = which_ == Filtration::column ? std::pair{p, q} : std::pair{q, p};
      out[p].push_back(page(r).dim(s, t));
    }
  return out;
}

std::vector<std::vector<int>> SpectralSequence::einfty_table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(maxdeg_ + 1));
  for (int p = 0; p <= maxdeg_; ++p)
    for (int q = 0; p + q <= maxdeg_; ++q) {
      auto [s, t] = which_ == Filtration::column ? std::pair{p, q} : std::pair{q, p};
      out[p].push_back(einfty_dim(s, t));
    }
  return out;
}

std::string SpectralSequence::format(int r) const {
  std::ostringstream os;
  auto tab = table(r);
  os << "E_" << r << " (" << (which_ == Filtration::column ? "column" : "row") << " filtration), rows q, columns p\n";
  for (int q = maxdeg_; q >= 0; --q) {
    os << "  q=" << q << " |";
    for (int p = 0; p + q <= maxdeg_; ++p) os << ' ' << tab[p][q];
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> einfty_vs_gr(const SpectralSequence& ss, const CohomologyRing* ring) {
  std::vector<std::string> out;
  const TotalComplex& tot = ss.total();
  const ModuleComplex& c = tot.complex();
  const Field& f = c.field();
  std::vector<Homology> hs;
  // images of H(F^s) in H^n, s = 0..n+1
  std::vector<std::vector<Subspace>> filt;
  for (int n = 0; n <= ss.maxdeg(); ++n) {
    hs.push_back(homology(c, n));
    const Homology& h = hs.back();
    std::vector<Subspace> fs;
    for (int s = 0; s <= n + 1; ++s) {
      std::vector<Vec> cls;
      for (const auto& v : h.cycles.intersect(tot.filtration(n, ss.filtration(), s)).basis()) cls.push_back(h.classify(v));
      fs.push_back(Subspace::span(f, h.dim(), cls));
    }
    filt.push_back(std::move(fs));
    int total = 0;
    for (int s = 0; s <= n; ++s) {
      const PageSlot& e = ss.einfty(s, n - s);
      total += e.dim();
      std::vector<Vec> cls;
      for (const auto& rep : e.quotient.representatives) {
        if (!h.is_cycle(rep)) out.push_back("E_inf representative is not a cycle at " + slot_name(s, n - s));
        cls.push_back(h.classify(rep));
      }
      const Subspace& lower = filt[n][s + 1];
      Subspace span = lower.sum(Subspace::span(f, h.dim(), cls));
      if (span.dim() != lower.dim() + e.dim() || span != filt[n][s])
        out.push_back("E_inf does not map onto gr^" + std::to_string(s) + " H^" + std::to_string(n));
    }
    if (total != h.dim())
      out.push_back("sum of E_inf dims in degree " + std::to_string(n) + " is " + std::to_string(total) + ", H has " +
                    std::to_string(h.dim()));
    if (ring && n <= ring->maxdeg && ring->dim(n) != total)
      out.push_back("abutment has dim " + std::to_string(ring->dim(n)) + " in degree " + std::to_string(n));
  }
  const DgAlgebra* alg = ss.algebra();
  if (!alg) return out;
  for (int n1 = 0; n1 <= ss.maxdeg(); ++n1)
    for (int n2 = 0; n1 + n2 <= ss.maxdeg(); ++n2)
      for (int s1 = 0; s1 <= n1; ++s1)
        for (int s2 = 0; s2 <= n2; ++s2) {
          int t1 = n1 - s1, t2 = n2 - s2, s = s1 + s2, n = n1 + n2;
          int r = std::max({SpectralSequence::stable_page(s1, t1), SpectralSequence::stable_page(s2, t2),
                            SpectralSequence::stable_page(s, n - s)});
          if (r > ss.r_max()) throw NotStabilized("E_inf products need page " + std::to_string(r));
          const PageSlot& e1 = ss.einfty(s1, t1);
          const PageSlot& e2 = ss.einfty(s2, t2);
          const PageSlot& e = ss.einfty(s, n - s);
          for (int i = 0; i < e1.dim(); ++i)
            for (int j = 0; j < e2.dim(); ++j) {
              Vec a = unit_vec(f, static_cast<std::size_t>(e1.dim()), static_cast<std::size_t>(i));
              Vec b = unit_vec(f, static_cast<std::size_t>(e2.dim()), static_cast<std::size_t>(j));
              Vec coords = ss.product(r, s1, t1, a, s2, t2, b);
              Vec got = hs[n].classify(alg->product(n1, e1.quotient.representatives[i], n2, e2.quotient.representatives[j]));
              Vec expect(got.size());
              for (int k = 0; k < e.dim(); ++k)
                if (!coords[k].is_zero()) axpy(expect, coords[k], hs[n].classify(e.quotient.representatives[k]));
              Vec diff = got;
              axpy(diff, Scalar(-1), expect);
              if (!filt[n][s + 1].contains(diff))
                out.push_back("E_inf product differs from gr H at " + slot_name(s1, t1) + ":" + std::to_string(i) +
                              " * " + slot_name(s2, t2) + ":" + std::to_string(j));
            }
        }
  return out;
}

}  // namespace smashcoh
