#include "smashcoh/hochschild/hh_ring.hpp"

#include <sstream>

namespace smashcoh {

std::vector<int> HHRing::indecomposables() const {
  std::vector<int> out{0};
  const Field& f = ring.groups.empty() ? Field() : ring.groups[0].cycles.field();
  for (int n = 1; n <= maxdeg(); ++n) {
    std::vector<Vec> products;
    for (int n1 = 1; n1 < n; ++n1)
      for (int i = 0; i < ring.dim(n1); ++i)
        for (int j = 0; j < ring.dim(n - n1); ++j) products.push_back(ring.product(n1, i, n - n1, j));
    out.push_back(ring.dim(n) - Subspace::span(f, ring.dim(n), products).dim());
  }
  return out;
}

std::string HHRing::sketch() const {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  };
  os << "dims ";
  list(dims());
  os << "\nindecomposables ";
  list(indecomposables());
  os << "\n";
  for (int n1 = 1; n1 <= maxdeg(); ++n1)
    for (int n2 = n1; n1 + n2 <= maxdeg(); ++n2)
      for (int i = 0; i < ring.dim(n1); ++i)
        for (int j = 0; j < ring.dim(n2); ++j) {
          const Vec& p = ring.product(n1, i, n2, j);
          if (is_zero(p)) continue;
          os << "[" << n1 << "." << i << "]*[" << n2 << "." << j << "] =";
          for (std::size_t k = 0; k < p.size(); ++k)
            if (!p[k].is_zero()) os << " " << p[k] << "[" << n1 + n2 << "." << k << "]";
          os << "\n";
        }
  return os.str();
}

HHRing hh_ring(const DgAlgebra& dg, int maxdeg) { return HHRing{cohomology_ring(dg, maxdeg), {}, {}}; }

HHRing hh_ring(const GammaHomDoubleComplex& dc, int maxdeg) {
  HHRing r = hh_ring(static_cast<const DgAlgebra&>(dc), maxdeg);
  for (int n = 0; n <= maxdeg; ++n) {
    r.gr_gamma.push_back(graded_cohomology_dims(dc.total(), n, Filtration::column));
    r.gr_a.push_back(graded_cohomology_dims(dc.total(), n, Filtration::row));
  }
  return r;
}

HHOracle::HHOracle(const AlgebraExtension& ext, int maxdeg) {
  bar_ = std::make_unique<FreeBimoduleResolution>(bar_resolution(ext.source, std::nullopt, maxdeg + 1, true));
  cochains_ = std::make_unique<HomAeAlgebra>(*bar_, plain_coefficients(ext), maxdeg + 1);
  ring_ = hh_ring(*cochains_, maxdeg);
}

HHRing hh_oracle(const AlgebraExtension& ext, int maxdeg) { return HHOracle(ext, maxdeg).ring(); }

std::vector<std::string> compare_with_oracle(const SmashCochains& c, const HHRing& ring, const HHOracle& oracle) {
  std::vector<std::string> out;
  const SmashComplex& x = c.source();
  const FreeBimoduleResolution& bar = oracle.bar();
  const HHRing& oring = oracle.ring();
  const Field& f = x.smash().field();
  int top = std::min(ring.maxdeg(), oring.maxdeg());
  int db = c.bdim();

  SparseMatrix aug(f, bar.adim(), static_cast<int>(bar.full_dim(0)));
  for (std::int64_t i = 0; i < bar.full_dim(0); ++i) aug.set_column(static_cast<int>(i), bar.augmentation_full(i));
  std::vector<SparseVec> targets;
  for (std::int64_t v = 0; v < x.base_dim(0); ++v) targets.push_back(x.generator_augmentation(v));
  FreeMap map = lift_chain_map(x.free_source(), bar.lift_target(), solve(aug, targets), top);

  auto pullback = [&](int n, const Vec& psi) {
    Vec theta(static_cast<std::size_t>(x.base_dim(n) * db));
    for (std::int64_t v = 0; v < x.base_dim(n); ++v) {
      Accumulator acc;
      for (const auto& [i, coef] : map[n][v].terms) acc.add(oracle.cochains().evaluate(n, psi, i), coef);
      for (const auto& [e, coef] : acc.finish().terms) theta[static_cast<std::size_t>(v * db + e)] = coef;
    }
    return theta;
  };

  std::vector<Matrix> m;
  for (int n = 0; n <= top; ++n) {
    std::vector<Vec> cols;
    for (const auto& rep : oring.ring.groups[n].representatives) {
      Vec theta = pullback(n, rep);
      if (!ring.ring.groups[n].is_cycle(theta)) out.push_back("pullback of an oracle cocycle is not a cocycle");
      cols.push_back(ring.ring.groups[n].classify(theta));
    }
    Matrix mn = Matrix::from_cols(f, cols, ring.ring.dim(n));
    if (ring.ring.dim(n) != oring.ring.dim(n) || rank(mn) != ring.ring.dim(n))
      out.push_back("comparison is not an isomorphism in degree " + std::to_string(n));
    m.push_back(std::move(mn));
  }
  if (!out.empty()) return out;
  for (int n1 = 0; n1 <= top; ++n1)
    for (int n2 = 0; n1 + n2 <= top; ++n2)
      for (int i = 0; i < oring.ring.dim(n1); ++i)
        for (int j = 0; j < oring.ring.dim(n2); ++j) {
          Vec lhs = m[n1 + n2].apply(oring.ring.product(n1, i, n2, j));
          Vec rhs = ring.ring.multiply(n1, m[n1].col(i), n2, m[n2].col(j));
          if (lhs != rhs)
            out.push_back("product of oracle classes (" + std::to_string(n1) + ":" + std::to_string(i) + ", " +
                          std::to_string(n2) + ":" + std::to_string(j) + ") is not preserved");
        }
  return out;
}

}  // namespace smashcoh
