#include "doctest.h"
#include "smashcoh/hochschild/pipeline.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

ModuleAlgebraAction trivial_z2_on_dual(const Field& f) {
  return trivial_action(group_algebra(cyclic_group(2), f), truncated_polynomial(f, 2));
}

ModuleAlgebraAction z2_on_k(const Field& f) {
  return trivial_action(group_algebra(cyclic_group(2), f), truncated_polynomial(f, 1));
}

std::vector<int> head(std::vector<int> v, std::size_t n) {
  v.resize(n);
  return v;
}

/// Extends generator values R^e-linearly to the full basis of X_n.
Vec extend_to_full(const SmashCochains& c, int n, const Vec& theta) {
  const SmashComplex& x = c.source();
  const FinDimAlgebra& b = c.extension().target;
  int db = b.dim();
  Vec out(static_cast<std::size_t>(x.full_dim(n) * db));
  for (std::int64_t i = 0; i < x.full_dim(n); ++i) {
    Accumulator acc;
    for (const auto& [fidx, coef] : x.psi_inverse(n, SparseVec{{{i, Scalar(1)}}}).terms) {
      int r, r2;
      std::int64_t v;
      x.free_decode(n, fidx, r, v, r2);
      SparseVec val = b.multiply(SparseVec::from_dense(c.extension().map.col(r)), slice(theta, v * db, db));
      acc.add(b.multiply(val, SparseVec::from_dense(c.extension().map.col(r2))), coef);
    }
    for (const auto& [e, coef] : acc.finish().terms) out[static_cast<std::size_t>(i * db + e)] = coef;
  }
  return out;
}

}  // namespace

TEST_CASE("algebra extensions") {
  FinDimAlgebra r = smash_product(sign_action_on_dual_numbers(Q));
  CHECK(validate_extension(identity_extension(r)).empty());
  AlgebraExtension bad = identity_extension(r);
  bad.map = bad.map.scaled(Scalar(2));
  CHECK_FALSE(validate_extension(bad).empty());
  HopfAlgebra kg = group_algebra(cyclic_group(2), F2);
  CHECK(validate_extension(character_extension(kg.algebra(), kg.counit())).empty());
}

TEST_CASE("inner cochain algebra Hom_{A^e}(K, B)") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  HHPipeline pl(act, {3, false, "auto", std::nullopt, false});
  const HomAeAlgebra& w = pl.inner();
  const FinDimAlgebra& b = pl.extension().target;
  CHECK(w.complex().dim(0) == b.dim());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      CHECK(w.product(0, b.basis_vec(i), 0, b.basis_vec(j)) == b.product(i, j).to_dense(4));
  // degree 0 action: b -> S(g_1) b g_2
  const HopfAlgebra& h = act.hopf;
  Matrix incg = smash_inclusion_Gamma(act);
  for (int g = 0; g < h.dim(); ++g)
    for (int i = 0; i < b.dim(); ++i) {
      Vec expect(4);
      for (const auto& [idx, c] : h.coproduct(g).terms) {
        int g1 = static_cast<int>(idx / h.dim()), g2 = static_cast<int>(idx % h.dim());
        Vec s1 = incg.apply(h.S(g1).to_dense(2));
        axpy(expect, c, b.multiply(b.multiply(s1, b.basis_vec(i)), incg.col(g2)));
      }
      CHECK(w.right_action(0, g).apply(b.basis_vec(i)) == expect);
    }
  CHECK(w.complex().validate().empty());
  CHECK(check_leibniz(w, 2).empty());
}

TEST_CASE("module-algebra identity for the right action") {
  for (auto act : {sign_action_on_dual_numbers(Q), sweedler_on_dual_numbers(Q)}) {
    HHPipeline pl(act, {2, false, "auto", std::nullopt, false});
    const HomAeAlgebra& w = pl.inner();
    const HopfAlgebra& h = act.hopf;
    const Field& f = w.complex().field();
    for (int n1 = 0; n1 <= 2; ++n1)
      for (int n2 = 0; n1 + n2 <= 2; ++n2)
        for (int i = 0; i < w.complex().dim(n1); ++i)
          for (int j = 0; j < w.complex().dim(n2); ++j) {
            Vec x = unit_vec(f, static_cast<std::size_t>(w.complex().dim(n1)), static_cast<std::size_t>(i));
            Vec y = unit_vec(f, static_cast<std::size_t>(w.complex().dim(n2)), static_cast<std::size_t>(j));
            Vec xy = w.product(n1, x, n2, y);
            for (int g = 0; g < h.dim(); ++g) {
              Vec rhs(xy.size());
              for (const auto& [idx, c] : h.coproduct(g).terms)
                axpy(rhs, c,
                     w.product(n1, w.right_action(n1, static_cast<int>(idx / h.dim())).apply(x), n2,
                               w.right_action(n2, static_cast<int>(idx % h.dim())).apply(y)));
              CHECK(w.right_action(n1 + n2, g).apply(xy) == rhs);
            }
          }
  }
}

TEST_CASE("Xi and Phi are inverse chain isomorphisms") {
  HHPipeline z2(sign_action_on_dual_numbers(Q), {4, false, "auto", std::nullopt, true});
  CHECK(z2.xi().check_isomorphism().empty());
  CHECK(z2.smash_cochains().complex().validate().empty());
  HHPipeline h4(sweedler_on_dual_numbers(Q), {3, false, "auto", std::nullopt, true});
  CHECK(h4.xi().check_isomorphism().empty());
}

TEST_CASE("Xi is multiplicative on basis cochains") {
  HHPipeline z2(sign_action_on_dual_numbers(Q), {2, false, "auto", std::nullopt, true});
  CHECK(z2.xi().check_multiplicative(2).empty());
  HHPipeline lifted(sign_action_on_dual_numbers(Q), {2, false, "lifted", std::nullopt, true});
  CHECK(lifted.xi().check_multiplicative(2).empty());
  HHPipeline h4(sweedler_on_dual_numbers(Q), {2, false, "auto", std::nullopt, true});
  CHECK(h4.xi().check_multiplicative(2).empty());
}

TEST_CASE("Leibniz rule on both models") {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {3, false, "auto", std::nullopt, true});
  CHECK(check_leibniz(pl.double_complex(), 2).empty());
  CHECK(check_leibniz(pl.smash_cochains(), 2).empty());
}

TEST_CASE("full-basis inputs are checked for linearity") {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {2, false, "auto", std::nullopt, true});
  const SmashCochains& c = pl.smash_cochains();
  std::uint64_t state = 7;
  for (int n = 0; n <= 2; ++n) {
    Vec theta = random_vector(Q, c.complex().dim(n), state);
    Vec full = extend_to_full(c, n, theta);
    CHECK(c.from_full(n, full) == theta);
    CHECK(pl.xi().xi_full(n, full) == pl.xi().xi_map(n, theta));
    full[0] += Scalar(1);
    CHECK_THROWS_AS(c.from_full(n, full), NotLinear);
  }
}

TEST_CASE("round trip on a random degree-2 cochain") {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {3, false, "auto", std::nullopt, true});
  std::uint64_t state = 11;
  Vec theta = random_vector(Q, pl.smash_cochains().complex().dim(2), state);
  CHECK(pl.xi().phi_inverse(2, pl.xi().xi_map(2, theta)) == theta);
}

TEST_CASE("oracle dimensions") {
  CHECK(head(hh_oracle(identity_extension(truncated_polynomial(Q, 2)), 3).dims(), 4) == std::vector<int>{2, 1, 1, 1});
  CHECK(hh_oracle(identity_extension(group_algebra(cyclic_group(2), Q).algebra()), 3).dims() ==
        std::vector<int>{2, 0, 0, 0});
  CHECK(hh_oracle(identity_extension(group_algebra(cyclic_group(2), F2).algebra()), 3).dims() ==
        std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("double complex agrees with the oracle") {
  struct Case {
    const char* name;
    ModuleAlgebraAction act;
  };
  std::vector<Case> cases{{"sign action", sign_action_on_dual_numbers(Q)},
                          {"trivial Z/2 over F2", trivial_z2_on_dual(F2)},
                          {"A = k over Q", z2_on_k(Q)},
                          {"A = k over F2", z2_on_k(F2)}};
  for (auto& cs : cases) {
    CAPTURE(cs.name);
    HHPipeline pl(cs.act, {4, false, "auto", std::nullopt, true});
    HHRing dc = hh_ring(pl.double_complex(), 3);
    HHOracle oracle(pl.extension(), 3);
    CHECK(dc.dims() == oracle.ring().dims());
    HHRing sm = hh_ring(pl.smash_cochains(), 3);
    CHECK(sm.dims() == dc.dims());
    CHECK(compare_with_oracle(pl.smash_cochains(), sm, oracle).empty());
  }
}

TEST_CASE("group cohomology of Z/2 over F2 is polynomial") {
  ModuleAlgebraAction act = z2_on_k(F2);
  FinDimAlgebra r = smash_product(act);
  HHPipeline pl(act, {4, false, "auto", character_extension(r, Vec(2, F2.one())), false});
  HHRing ring = hh_ring(pl.double_complex(), 3);
  REQUIRE(ring.dims() == std::vector<int>{1, 1, 1, 1});
  CHECK_FALSE(is_zero(ring.ring.product(1, 0, 1, 0)));
  CHECK_FALSE(is_zero(ring.ring.product(1, 0, 2, 0)));
  CHECK(ring.indecomposables() == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("semisimple Gamma: cohomology sits in column 0") {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {4, false, "auto", std::nullopt, false});
  HHRing ring = hh_ring(pl.double_complex(), 3);
  CHECK(ring.dims()[0] == 1);
  for (int n = 0; n <= 3; ++n)
    for (std::size_t p = 1; p < ring.gr_gamma[n].size(); ++p) CHECK(ring.gr_gamma[n][p] == 0);
}
