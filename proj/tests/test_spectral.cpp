#include "doctest.h"
#include "smashcoh/ext/lhs.hpp"
#include "smashcoh/spectral/checks.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

std::vector<std::vector<std::int64_t>> dims_of(int n, const std::map<std::pair<int, int>, int>& nonzero) {
  std::vector<std::vector<std::int64_t>> d(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q) {
      auto it = nonzero.find({p, q});
      d[p].push_back(it == nonzero.end() ? 0 : it->second);
    }
  return d;
}

SparseMatrix one(const Field& f) { return SparseMatrix::from_dense(Matrix::identity(f, 1)); }

}  // namespace

TEST_CASE("zero differentials: every page is E_0") {
  DoubleComplex dc(Q, 4, dims_of(4, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 1}, {{1, 1}, 3}, {{0, 2}, 2}}));
  TotalComplex tot(dc);
  SpectralSequence ss(tot, nullptr, Filtration::column, 4, 2);
  for (int r = 1; r <= 4; ++r) CHECK(ss.table(r) == ss.table(1));
  CHECK(ss.table(1) == std::vector<std::vector<int>>{{1, 1, 2}, {2, 3}, {0}});
  CHECK(ss.einfty_table() == ss.table(1));
  CHECK(ss.check_pages().empty());
  CHECK(einfty_vs_gr(ss, nullptr).empty());
}

TEST_CASE("a zig-zag gives a nonzero d_2") {
  DoubleComplex dc(Q, 4, dims_of(4, {{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 0}, 1}}));
  dc.dh[0][1] = one(Q);
  dc.dv[1][0] = one(Q);
  dc.dh[1][0] = one(Q);
  TotalComplex tot(dc);
  SpectralSequence ss(tot, nullptr, Filtration::column, 4, 2);
  CHECK(ss.dim(1, 0, 1) == 1);
  CHECK(ss.dim(1, 1, 0) == 0);
  CHECK(ss.dim(2, 2, 0) == 1);
  CHECK_FALSE(ss.page(2).d.at({0, 1}).is_zero());
  CHECK(ss.dim(3, 0, 1) == 0);
  CHECK(ss.dim(3, 2, 0) == 0);
  CHECK(ss.check_pages().empty());
  CHECK(einfty_vs_gr(ss, nullptr).empty());
}

TEST_CASE("stabilization needs enough pages") {
  DoubleComplex dc(Q, 5, dims_of(5, {{{0, 0}, 1}}));
  TotalComplex tot(dc);
  SpectralSequence ss(tot, nullptr, Filtration::column, 2, 3);
  CHECK(SpectralSequence::stable_page(0, 3) == 5);
  CHECK_THROWS_AS(ss.einfty_table(), NotStabilized);
  CHECK_THROWS_AS(SpectralSequence(tot, nullptr, Filtration::column, 2, 4), std::invalid_argument);
}

TEST_CASE("semisimple Gamma collapses at E_2 on the column p = 0") {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {5, false, "auto", std::nullopt, false});
  const GammaHomDoubleComplex& dc = pl.double_complex();
  SpectralSequence ss(dc.total(), &dc, Filtration::column, 5, 3);
  auto e2 = ss.table(2);
  for (int p = 1; p <= 3; ++p)
    for (int v : e2[p]) CHECK(v == 0);
  CHECK(e2 == ss.einfty_table());
  HHRing ring = hh_ring(dc, 3);
  CHECK(einfty_vs_gr(ss, &ring.ring).empty());
  CHECK(ss.check_pages().empty());
  CHECK(check_column_e2(dc, ss).empty());
}

TEST_CASE("trivial action over F2: E_2 is HH(A) in every column") {
  ModuleAlgebraAction act = trivial_action(group_algebra(cyclic_group(2), F2), truncated_polynomial(F2, 2));
  FinDimAlgebra r = smash_product(act);
  // a # g -> a is an algebra map for the trivial action
  Matrix map(F2, 2, 4);
  for (int a = 0; a < 2; ++a)
    for (int g = 0; g < 2; ++g) map.set(a, a * 2 + g, F2.one());
  AlgebraExtension ext{r, act.algebra, map};
  HHPipeline pl(act, {4, false, "auto", ext, false});
  const GammaHomDoubleComplex& dc = pl.double_complex();
  SpectralSequence ss(dc.total(), &dc, Filtration::column, 4, 2);
  std::vector<int> hh = hh_oracle(identity_extension(act.algebra), 2).dims();
  auto e2 = ss.table(2);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; p + q <= 2; ++q) CHECK(e2[p][q] == hh[q]);
  CHECK(check_column_e2(dc, ss).empty());
  CHECK(ss.check_pages().empty());
  HHRing ring = hh_ring(dc, 2);
  CHECK(einfty_vs_gr(ss, &ring.ring).empty());
}

TEST_CASE("row filtration: E_1 is Ext_Gamma(k, Hom_{A^e}(K, B))") {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {4, false, "auto", std::nullopt, false});
  const GammaHomDoubleComplex& dc = pl.double_complex();
  SpectralSequence ss(dc.total(), &dc, Filtration::row, 4, 2);
  CHECK(check_row_e1(dc, ss).empty());
  CHECK(ss.check_pages().empty());
  HHRing ring = hh_ring(dc, 2);
  CHECK(einfty_vs_gr(ss, &ring.ring).empty());
}

TEST_CASE("Sweedler H4: pages are multiplicative") {
  HHPipeline pl(sweedler_on_dual_numbers(Q), {4, false, "auto", std::nullopt, false});
  const GammaHomDoubleComplex& dc = pl.double_complex();
  SpectralSequence col(dc.total(), &dc, Filtration::column, 4, 2);
  CHECK(col.check_pages().empty());
  CHECK(check_column_e2(dc, col).empty());
  HHRing ring = hh_ring(dc, 2);
  CHECK(einfty_vs_gr(col, &ring.ring).empty());
}

TEST_CASE("Lyndon-Hochschild-Serre for S3") {
  SemidirectData s3 = s3_as_semidirect();
  LHSReport f3 = lhs_specialize(s3.n, s3.g, s3.action, F3, 4);
  CHECK(f3.mismatches.empty());
  CHECK(f3.abutment.dims() == std::vector<int>{1, 0, 0, 1, 1});
  // H(N, F3) = F3 in each degree; Z/2 acts by (-1)^{ceil(q/2)}, invariants in q = 0, 3, 4
  CHECK(f3.e2 == std::vector<std::vector<int>>{{1, 0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0}, {0, 0}, {0}});
  LHSReport f2 = lhs_specialize(s3.n, s3.g, s3.action, F2, 3);
  CHECK(f2.mismatches.empty());
  CHECK(f2.abutment.dims() == std::vector<int>{1, 1, 1, 1});
  CHECK(f2.e2 == std::vector<std::vector<int>>{{1, 0, 0, 0}, {1, 0, 0}, {1, 0}, {1}});
  FiniteGroup trivial = trivial_group();
  LHSReport only_g = lhs_specialize(trivial, cyclic_group(2), GroupAction{{{0}, {0}}}, F2, 3);
  CHECK(only_g.abutment.dims() == std::vector<int>{1, 1, 1, 1});
  LHSReport only_n = lhs_specialize(cyclic_group(3), trivial, GroupAction{{{0, 1, 2}}}, F3, 3);
  CHECK(only_n.abutment.dims() == std::vector<int>{1, 1, 1, 1});
}
