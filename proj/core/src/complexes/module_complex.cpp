#include "smashcoh/complexes/module_complex.hpp"

#include <functional>

namespace smashcoh {

ModuleComplex::ModuleComplex(Field f, int lo, std::vector<std::int64_t> dims, int step)
    : field_(f), lo_(lo), step_(step), dims_(std::move(dims)) {
  if (step != 1 && step != -1) throw std::invalid_argument("step must be +1 or -1");
  for (int n = lo_; n <= hi(); ++n) {
    d_.emplace_back(field_, this->dim(n + step_), this->dim(n));
  }
  trusted_hi = hi();
}

int ModuleComplex::dim(int n) const {
  if (!in_range(n)) return 0;
  return static_cast<int>(dims_[static_cast<std::size_t>(n - lo_)]);
}

const SparseMatrix& ModuleComplex::d(int n) const {
  static const SparseMatrix empty;
  if (!in_range(n)) return empty;
  return d_[static_cast<std::size_t>(n - lo_)];
}

void ModuleComplex::set_differential(int n, SparseMatrix m) {
  if (!in_range(n)) throw std::out_of_range("differential degree out of range");
  if (m.cols() != dim(n) || m.rows() != dim(n + step_)) throw std::invalid_argument("differential has wrong shape");
  d_[static_cast<std::size_t>(n - lo_)] = std::move(m);
}

void ModuleComplex::add_family(ActionFamily fam) {
  if (static_cast<int>(fam.ops.size()) != hi() - lo_ + 1) throw std::invalid_argument("family must cover every degree");
  families_.push_back(std::move(fam));
}

bool ModuleComplex::has_family(const std::string& name) const {
  for (const auto& f : families_)
    if (f.name == name) return true;
  return false;
}

const ActionFamily& ModuleComplex::family(const std::string& name) const {
  for (const auto& f : families_)
    if (f.name == name) return f;
  throw StructureMismatch("complex has no action family '" + name + "'");
}

std::vector<std::string> ModuleComplex::validate() const {
  std::vector<std::string> out;
  for (int n = lo_; n <= hi(); ++n) {
    int m = n + step_;
    if (!in_range(m) || !in_range(m + step_)) continue;
    if (!(d(m) * d(n)).is_zero()) out.push_back("d o d != 0 at degree " + std::to_string(n));
  }
  for (const auto& fam : families_)
    for (int n = lo_; n <= hi(); ++n) {
      int m = n + step_;
      if (!in_range(m)) continue;
      const auto& src = fam.ops[static_cast<std::size_t>(n - lo_)];
      const auto& dst = fam.ops[static_cast<std::size_t>(m - lo_)];
      for (std::size_t k = 0; k < src.size(); ++k)
        if (d(n) * src[k] != dst[k] * d(n))
          out.push_back("differential does not commute with " + fam.name + "[" + std::to_string(k) + "] at degree " +
                        std::to_string(n));
    }
  return out;
}

Homology homology(const ModuleComplex& x, int n) {
  Homology h;
  h.degree = n;
  const Field& f = x.field();
  int dn = x.dim(n);
  h.cycles = x.in_range(n + x.step()) ? kernel_basis(x.d(n)) : Subspace::full(f, dn);
  int prev = n - x.step();
  h.boundaries = x.in_range(prev) ? Subspace::image(x.d(prev)) : Subspace(f, dn);
  QuotientData q = quotient_data(h.cycles, h.boundaries);
  h.representatives = std::move(q.representatives);
  h.projection = std::move(q.projection);
  return h;
}

std::vector<int> homology_dims(const ModuleComplex& x) {
  std::vector<int> out;
  for (int n = x.lo(); n <= x.hi(); ++n) out.push_back(homology(x, n).dim());
  return out;
}

Vec HomComplex::flatten_coords(int n, const Vec& coords) const {
  return basis[static_cast<std::size_t>(n - complex.lo())].apply(coords);
}

namespace {

struct HomLayout {
  std::vector<int> src_degrees;
  std::vector<std::int64_t> offsets;
  std::int64_t total = 0;
};

HomLayout hom_layout(const ModuleComplex& x, const ModuleComplex& y, int n) {
  HomLayout l;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    int j = i + n;
    if (!y.in_range(j) || x.dim(i) == 0 || y.dim(j) == 0) continue;
    l.src_degrees.push_back(i);
    l.offsets.push_back(l.total);
    l.total += static_cast<std::int64_t>(x.dim(i)) * y.dim(j);
  }
  return l;
}

}  // namespace

HomComplex hom_complex(const ModuleComplex& x, const ModuleComplex& y, const std::vector<std::string>& over) {
  if (x.field() != y.field()) throw StructureMismatch("hom_complex over different fields");
  if (x.step() != y.step()) throw StructureMismatch("hom_complex of a chain and a cochain complex");
  for (const auto& name : over)
    if (!x.has_family(name) || !y.has_family(name))
      throw StructureMismatch("structure '" + name + "' is not declared on both complexes");
  const Field& f = x.field();
  int lo = y.lo() - x.hi(), hi = y.hi() - x.lo();
  std::vector<HomLayout> layouts;
  std::vector<Matrix> bases;
  std::vector<std::int64_t> dims;
  for (int n = lo; n <= hi; ++n) {
    HomLayout l = hom_layout(x, y, n);
    std::vector<Matrix> blocks;
    for (const auto& name : over) {
      const auto& fx = x.family(name);
      const auto& fy = y.family(name);
      std::size_t nops = fx.ops[0].size();
      for (std::size_t k = 0; k < nops; ++k) {
        Matrix c(f, static_cast<int>(l.total), static_cast<int>(l.total));
        for (std::size_t b = 0; b < l.src_degrees.size(); ++b) {
          int i = l.src_degrees[b], j = i + n;
          Matrix ay = fy.ops[static_cast<std::size_t>(j - y.lo())][k].to_dense();
          Matrix ax = fx.ops[static_cast<std::size_t>(i - x.lo())][k].to_dense();
          Matrix blk = tensor(ay, Matrix::identity(f, x.dim(i))) - tensor(Matrix::identity(f, y.dim(j)), ax.transpose());
          c.set_block(static_cast<int>(l.offsets[b]), static_cast<int>(l.offsets[b]), blk);
        }
        blocks.push_back(c);
      }
    }
    Subspace ker = Subspace::full(f, static_cast<int>(l.total));
    for (const auto& c : blocks) ker = ker.intersect(kernel_basis(c));
    Matrix basis = ker.dim() > 0 ? ker.basis_matrix() : Matrix(f, static_cast<int>(l.total), 0);
    dims.push_back(ker.dim());
    bases.push_back(basis);
    layouts.push_back(l);
  }
  HomComplex out;
  out.complex = ModuleComplex(f, lo, dims, x.step());
  out.basis = bases;
  for (int n = lo; n <= hi; ++n) {
    int m = n + x.step();
    if (m < lo || m > hi) continue;
    const HomLayout& ls = layouts[static_cast<std::size_t>(n - lo)];
    const HomLayout& lt = layouts[static_cast<std::size_t>(m - lo)];
    const Matrix& bs = bases[static_cast<std::size_t>(n - lo)];
    const Matrix& bt = bases[static_cast<std::size_t>(m - lo)];
    Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    Matrix images(f, static_cast<int>(lt.total), bs.cols());
    for (int c = 0; c < bs.cols(); ++c) {
      Vec fl = bs.col(c);
      Vec img(static_cast<std::size_t>(lt.total));
      for (std::size_t b = 0; b < lt.src_degrees.size(); ++b) {
        int i = lt.src_degrees[b], j = i + m;
        int ri = y.dim(j), ci = x.dim(i);
        Matrix blk(f, ri, ci);
        // d_Y f_i : X_i -> Y_{i+n} -> Y_{i+n+step}
        for (std::size_t s = 0; s < ls.src_degrees.size(); ++s)
          if (ls.src_degrees[s] == i) {
            Matrix fi(f, y.dim(i + n), ci);
            for (int r = 0; r < fi.rows(); ++r)
              for (int cc = 0; cc < ci; ++cc) fi.set(r, cc, fl[static_cast<std::size_t>(ls.offsets[s] + r * ci + cc)]);
            blk = blk + y.d(i + n).to_dense() * fi;
          }
        // f_{i+step} d_X : X_i -> X_{i+step} -> Y_{i+step+n}
        for (std::size_t s = 0; s < ls.src_degrees.size(); ++s)
          if (ls.src_degrees[s] == i + x.step()) {
            int cs = x.dim(i + x.step());
            Matrix fi(f, ri, cs);
            for (int r = 0; r < ri; ++r)
              for (int cc = 0; cc < cs; ++cc) fi.set(r, cc, fl[static_cast<std::size_t>(ls.offsets[s] + r * cs + cc)]);
            blk = blk - (fi * x.d(i).to_dense()).scaled(sign);
          }
        for (int r = 0; r < ri; ++r)
          for (int cc = 0; cc < ci; ++cc) img[static_cast<std::size_t>(lt.offsets[b] + r * ci + cc)] = blk(r, cc);
      }
      images.set_col(c, img);
    }
    out.complex.set_differential(n, SparseMatrix::from_dense(solve(bt, images)));
  }
  return out;
}

TensorComplex tensor_over_algebra(const ModuleComplex& x, const std::string& right_family, const ModuleComplex& y,
                                  const std::string& left_family) {
  if (x.field() != y.field()) throw StructureMismatch("tensor_over_algebra over different fields");
  if (x.step() != y.step()) throw StructureMismatch("tensor_over_algebra of a chain and a cochain complex");
  const ActionFamily& ra = x.family(right_family);
  const ActionFamily& la = y.family(left_family);
  if (ra.ops[0].size() != la.ops[0].size()) throw StructureMismatch("actions come from algebras of different dimension");
  const Field& f = x.field();
  int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
  TensorComplex out;
  std::vector<std::int64_t> dims;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::int64_t> offs;
    std::int64_t total = 0;
    for (int p = x.lo(); p <= x.hi(); ++p) {
      offs.push_back(total);
      total += static_cast<std::int64_t>(x.dim(p)) * y.dim(n - p);
    }
    std::vector<SparseVec> rel;
    for (int p = x.lo(); p <= x.hi(); ++p) {
      int q = n - p, dx = x.dim(p), dy = y.dim(q);
      if (dx == 0 || dy == 0) continue;
      std::int64_t off = offs[static_cast<std::size_t>(p - x.lo())];
      for (std::size_t k = 0; k < ra.ops[0].size(); ++k) {
        const SparseMatrix& r = ra.ops[static_cast<std::size_t>(p - x.lo())][k];
        const SparseMatrix& l = la.ops[static_cast<std::size_t>(q - y.lo())][k];
        for (int i = 0; i < dx; ++i)
          for (int j = 0; j < dy; ++j) {
            Accumulator acc;
            for (const auto& [ii, c] : r.column(i).terms) acc.add(off + ii * dy + j, c);
            for (const auto& [jj, c] : l.column(j).terms) acc.add(off + static_cast<std::int64_t>(i) * dy + jj, -c);
            SparseVec v = acc.finish();
            if (!v.empty()) rel.push_back(std::move(v));
          }
      }
    }
    Subspace full = Subspace::full(f, static_cast<int>(total));
    Subspace sub = Subspace::span(f, static_cast<int>(total), std::move(rel));
    out.quotients.push_back(quotient_data(full, sub));
    out.offsets.push_back(offs);
    out.full_dims.push_back(total);
    dims.push_back(out.quotients.back().dim());
  }
  out.complex = ModuleComplex(f, lo, dims, x.step());
  auto full_map = [&](int n, const Vec& v, auto&& op_x, auto&& op_y, bool koszul, int shift_x, int shift_y) {
    // op_x (x) id + (Koszul sign) id (x) op_y on a full vector in degree n
    int target = n + (shift_x != 0 ? shift_x : shift_y);
    Vec img(static_cast<std::size_t>(out.full_dims[static_cast<std::size_t>(target - lo)]));
    const auto& so = out.offsets[static_cast<std::size_t>(n - lo)];
    const auto& to = out.offsets[static_cast<std::size_t>(target - lo)];
    for (int p = x.lo(); p <= x.hi(); ++p) {
      int q = n - p, dx = x.dim(p), dy = y.dim(q);
      if (dx == 0 || dy == 0) continue;
      std::int64_t off = so[static_cast<std::size_t>(p - x.lo())];
      for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j) {
          const Scalar& c = v[static_cast<std::size_t>(off + static_cast<std::int64_t>(i) * dy + j)];
          if (c.is_zero()) continue;
          if (op_x) {
            int p2 = p + shift_x;
            if (x.in_range(p2) && x.dim(p2) > 0) {
              std::int64_t o2 = to[static_cast<std::size_t>(p2 - x.lo())];
              for (const auto& [ii, cc] : op_x(p, i).terms) img[static_cast<std::size_t>(o2 + ii * dy + j)] += c * cc;
            }
          }
          if (op_y) {
            int q2 = q + shift_y;
            if (y.in_range(q2) && y.dim(q2) > 0) {
              std::int64_t o2 = to[static_cast<std::size_t>(p - x.lo())];
              Scalar s = (koszul && p % 2 != 0) ? -c : c;
              int dy2 = y.dim(q2);
              for (const auto& [jj, cc] : op_y(q, j).terms)
                img[static_cast<std::size_t>(o2 + static_cast<std::int64_t>(i) * dy2 + jj)] += s * cc;
            }
          }
        }
    }
    return img;
  };
  using OpFn = std::function<const SparseVec&(int, int)>;
  for (int n = lo; n <= hi; ++n) {
    int m = n + x.step();
    if (m < lo || m > hi) continue;
    const QuotientData& qs = out.quotients[static_cast<std::size_t>(n - lo)];
    const QuotientData& qt = out.quotients[static_cast<std::size_t>(m - lo)];
    OpFn dx = [&](int p, int i) -> const SparseVec& { return x.d(p).column(i); };
    OpFn dy = [&](int q, int j) -> const SparseVec& { return y.d(q).column(j); };
    SparseMatrix dm(f, qt.dim(), qs.dim());
    for (int c = 0; c < qs.dim(); ++c)
      dm.set_column(c, SparseVec::from_dense(qt.project(full_map(n, qs.representatives[static_cast<std::size_t>(c)], dx,
                                                                 dy, true, x.step(), x.step()))));
    out.complex.set_differential(n, std::move(dm));
  }
  auto induced = [&](const ActionFamily& fam, bool on_x) {
    ActionFamily nf{fam.name, {}};
    for (int n = lo; n <= hi; ++n) {
      const QuotientData& q = out.quotients[static_cast<std::size_t>(n - lo)];
      std::vector<SparseMatrix> ops;
      for (std::size_t k = 0; k < fam.ops[0].size(); ++k) {
        OpFn ax = [&](int p, int i) -> const SparseVec& { return fam.ops[static_cast<std::size_t>(p - x.lo())][k].column(i); };
        OpFn ay = [&](int qq, int j) -> const SparseVec& {
          return fam.ops[static_cast<std::size_t>(qq - y.lo())][k].column(j);
        };
        SparseMatrix m(f, q.dim(), q.dim());
        for (int c = 0; c < q.dim(); ++c) {
          Vec img = on_x ? full_map(n, q.representatives[static_cast<std::size_t>(c)], ax, OpFn(), false, 0, 0)
                         : full_map(n, q.representatives[static_cast<std::size_t>(c)], OpFn(), ay, false, 0, 0);
          m.set_column(c, SparseVec::from_dense(q.project(img)));
        }
        ops.push_back(std::move(m));
      }
      nf.ops.push_back(std::move(ops));
    }
    out.complex.add_family(std::move(nf));
  };
  for (const auto& fam : x.families())
    if (fam.name.rfind("left", 0) == 0) induced(fam, true);
  for (const auto& fam : y.families())
    if (fam.name.rfind("right", 0) == 0) induced(fam, false);
  return out;
}

}  // namespace smashcoh
