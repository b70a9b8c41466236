#include "smashcoh/complexes/dg_algebra.hpp"

#include <random>

namespace smashcoh {

std::vector<std::string> check_leibniz(const DgAlgebra& a, int max_total, std::size_t max_failures) {
  std::vector<std::string> out;
  const ModuleComplex& c = a.complex();
  const Field& f = c.field();
  for (int n1 = 0; n1 <= max_total; ++n1)
    for (int n2 = 0; n1 + n2 <= max_total && n1 + n2 + 1 <= c.hi(); ++n2)
      for (int i = 0; i < c.dim(n1); ++i)
        for (int j = 0; j < c.dim(n2); ++j) {
          Vec x = unit_vec(f, static_cast<std::size_t>(c.dim(n1)), static_cast<std::size_t>(i));
          Vec y = unit_vec(f, static_cast<std::size_t>(c.dim(n2)), static_cast<std::size_t>(j));
          Vec lhs = c.d(n1 + n2).apply(a.product(n1, x, n2, y));
          Vec rhs = a.product(n1 + 1, c.d(n1).apply(x), n2, y);
          Vec right = a.product(n1, x, n2 + 1, c.d(n2).apply(y));
          axpy(rhs, n1 % 2 == 0 ? Scalar(1) : Scalar(-1), right);
          if (lhs != rhs) {
            out.push_back("Leibniz rule fails on basis pair (" + std::to_string(n1) + ":" + std::to_string(i) + ", " +
                          std::to_string(n2) + ":" + std::to_string(j) + ")");
            if (out.size() >= max_failures) return out;
          }
        }
  return out;
}

std::vector<int> CohomologyRing::dims() const {
  std::vector<int> out;
  for (const auto& g : groups) out.push_back(g.dim());
  return out;
}

const Vec& CohomologyRing::product(int n1, int i, int n2, int j) const {
  return table[static_cast<std::size_t>(n1)][static_cast<std::size_t>(n2)][static_cast<std::size_t>(i * dim(n2) + j)];
}

Vec CohomologyRing::multiply(int n1, const Vec& a, int n2, const Vec& b) const {
  Vec r(static_cast<std::size_t>(dim(n1 + n2)));
  for (int i = 0; i < dim(n1); ++i)
    for (int j = 0; j < dim(n2); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) axpy(r, a[i] * b[j], product(n1, i, n2, j));
  return r;
}

Vec random_vector(const Field& f, int n, std::uint64_t& state) {
  std::mt19937_64 gen(state);
  std::uniform_int_distribution<int> dist(-3, 3);
  Vec v(static_cast<std::size_t>(n));
  for (auto& x : v) x = f.from_int(dist(gen));
  state = gen();
  return v;
}

CohomologyRing cohomology_ring(const DgAlgebra& a, int maxdeg, int trials, std::uint64_t seed) {
  if (maxdeg > a.trusted_degree())
    throw std::invalid_argument("maxdeg " + std::to_string(maxdeg) + " exceeds the trusted range " +
                                std::to_string(a.trusted_degree()));
  const ModuleComplex& c = a.complex();
  const Field& f = c.field();
  CohomologyRing ring;
  ring.maxdeg = maxdeg;
  for (int n = 0; n <= maxdeg; ++n) ring.groups.push_back(homology(c, n));
  auto products = [&](const std::vector<std::vector<Vec>>& reps) {
    std::vector<std::vector<std::vector<Vec>>> t(static_cast<std::size_t>(maxdeg) + 1);
    for (int n1 = 0; n1 <= maxdeg; ++n1) {
      t[n1].resize(static_cast<std::size_t>(maxdeg - n1) + 1);
      for (int n2 = 0; n1 + n2 <= maxdeg; ++n2)
        for (const auto& x : reps[n1])
          for (const auto& y : reps[n2])
            t[n1][n2].push_back(ring.groups[static_cast<std::size_t>(n1 + n2)].classify(a.product(n1, x, n2, y)));
    }
    return t;
  };
  std::vector<std::vector<Vec>> reps;
  for (const auto& g : ring.groups) reps.push_back(g.representatives);
  ring.table = products(reps);
  std::uint64_t state = seed;
  for (int t = 0; t < trials; ++t) {
    auto perturbed = reps;
    for (int n = 1; n <= maxdeg; ++n)
      for (auto& r : perturbed[n]) axpy(r, f.one(), c.d(n - 1).apply(random_vector(f, c.dim(n - 1), state)));
    if (products(perturbed) != ring.table)
      throw RepresentativeDependence("product constants changed after perturbing representatives by coboundaries");
  }
  return ring;
}

}  // namespace smashcoh

namespace smashcoh {

std::vector<std::string> check_chain_isomorphism(const ModuleComplex& src, const ModuleComplex& dst,
                                                 const std::vector<SparseMatrix>& f,
                                                 const std::vector<SparseMatrix>* inverse) {
  std::vector<std::string> out;
  int top = static_cast<int>(f.size()) - 1;
  const Field& fld = src.field();
  for (int n = 0; n <= top; ++n) {
    if (f[n].cols() != src.dim(n) || f[n].rows() != dst.dim(n)) {
      out.push_back("map has the wrong shape in degree " + std::to_string(n));
      continue;
    }
    if (n < top && dst.d(n) * f[n] != f[n + 1] * src.d(n)) out.push_back("not a chain map in degree " + std::to_string(n));
    if (!inverse) continue;
    const SparseMatrix& g = (*inverse)[static_cast<std::size_t>(n)];
    if (g * f[n] != SparseMatrix::from_dense(Matrix::identity(fld, src.dim(n))) ||
        f[n] * g != SparseMatrix::from_dense(Matrix::identity(fld, dst.dim(n))))
      out.push_back("maps are not mutually inverse in degree " + std::to_string(n));
  }
  return out;
}

std::vector<std::string> check_multiplicative_map(const DgAlgebra& src, const DgAlgebra& dst,
                                                  const std::vector<SparseMatrix>& f, int max_total,
                                                  std::size_t max_failures) {
  std::vector<std::string> out;
  const Field& fld = src.complex().field();
  for (int n1 = 0; n1 <= max_total; ++n1)
    for (int n2 = 0; n1 + n2 <= max_total; ++n2) {
      int d1 = src.complex().dim(n1), d2 = src.complex().dim(n2);
      std::vector<Vec> ys, fys;
      for (int j = 0; j < d2; ++j) {
        ys.push_back(unit_vec(fld, static_cast<std::size_t>(d2), static_cast<std::size_t>(j)));
        fys.push_back(f[n2].apply(ys.back()));
      }
      for (int i = 0; i < d1; ++i) {
        Vec x = unit_vec(fld, static_cast<std::size_t>(d1), static_cast<std::size_t>(i));
        Vec fx = f[n1].apply(x);
        for (int j = 0; j < d2; ++j)
          if (f[n1 + n2].apply(src.product(n1, x, n2, ys[j])) != dst.product(n1, fx, n2, fys[j])) {
            out.push_back("map is not multiplicative on basis pair (" + std::to_string(n1) + ":" + std::to_string(i) +
                          ", " + std::to_string(n2) + ":" + std::to_string(j) + ")");
            if (out.size() >= max_failures) return out;
          }
      }
    }
  return out;
}

}  // namespace smashcoh
