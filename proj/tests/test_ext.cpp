#include "doctest.h"
#include "smashcoh/ext/group_cohomology.hpp"
#include "smashcoh/ext/lhs.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

/// A acting on itself, Gamma through the module-algebra action.
SmashModule algebra_as_module(const ModuleAlgebraAction& act) {
  std::vector<Matrix> a;
  for (int i = 0; i < act.algebra.dim(); ++i) a.push_back(act.algebra.left_mult(i));
  return smash_module(act, a, act.act);
}

SmashModule ground(const ModuleAlgebraAction& act) {
  Vec chi(static_cast<std::size_t>(act.algebra.dim()));
  chi[0] = act.field().one();
  return character_module(act, chi);
}

std::vector<int> head(std::vector<int> v, std::size_t n) {
  v.resize(n);
  return v;
}

}  // namespace

TEST_CASE("smash modules and Hom_k(M, N)") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  SmashModule k = ground(act);
  CHECK(validate_smash_module(k).empty());
  BimoduleStructure hom = hom_k_bimodule(k, k);
  CHECK(hom.carrier_dim == 1);
  CHECK(validate_bimodule(hom).empty());
  CHECK(validate_bimodule(hom_k_bimodule(algebra_as_module(act), k)).empty());
  SmashModule m = algebra_as_module(act);
  AlgebraExtension end = endomorphism_extension(m);
  CHECK(end.target.dim() == 4);
  CHECK(validate_extension(end).empty());
  FinDimAlgebra r = smash_product(act);

  CHECK(end.map.apply(r.unit()) == end.target.unit());
  // sign character on Gamma is compatible; a non-module is rejected
  CHECK_THROWS_AS(smash_module(act, {Matrix::identity(Q, 1), Matrix::from_ints(Q, {{1}})},
                               {Matrix::identity(Q, 1), Matrix::from_ints(Q, {{-1}})}),
                  ValidationError);
  CHECK(regular_module(act).dim == 4);
  CHECK(validate_smash_module(regular_module(act)).empty());
}

TEST_CASE("adjunction is an equivariant dg isomorphism") {
  ModuleAlgebraAction z2 = sign_action_on_dual_numbers(Q), h4 = sweedler_on_dual_numbers(Q);
  // k with y acting by 0 is not an H4-equivariant module: x . y = 1
  CHECK_THROWS_AS(ground(h4), ValidationError);
  for (const SmashModule& m : {ground(z2), algebra_as_module(z2), algebra_as_module(h4)}) {
    const ModuleAlgebraAction& act = m.action;
    {
      ExtPipeline pl(act, m, {3, "auto", false});
      CHECK(pl.check_adjunction(2).empty());
      CHECK(pl.yoneda().complex().validate().empty());
      CHECK(check_leibniz(pl.yoneda(), 2).empty());
    }
  }
}

TEST_CASE("double complexes and the left side are isomorphic") {
  ExtPipeline z2(sign_action_on_dual_numbers(Q), algebra_as_module(sign_action_on_dual_numbers(Q)), {3, "auto", true});
  CHECK(z2.check_double_complex(2).empty());
  CHECK(z2.check_composite(2).empty());
  ExtPipeline h4(sweedler_on_dual_numbers(Q), algebra_as_module(sweedler_on_dual_numbers(Q)), {2, "auto", true});
  CHECK(h4.check_double_complex(2).empty());
  CHECK(h4.check_composite(2).empty());
}

TEST_CASE("Ext over the dual numbers is polynomial") {
  ModuleAlgebraAction act = trivial_action(trivial_hopf(Q), truncated_polynomial(Q, 2));
  ExtPipeline pl(act, ground(act), {5, "auto", false});
  HHRing ring = pl.ring(4);
  REQUIRE(ring.dims() == std::vector<int>{1, 1, 1, 1, 1});
  Vec y = ring.ring.product(1, 0, 1, 0);
  CHECK_FALSE(is_zero(y));
  CHECK_FALSE(is_zero(ring.ring.multiply(2, y, 1, Vec{Q.one()})));
  CHECK(ring.indecomposables() == std::vector<int>{0, 1, 0, 0, 0});
}

TEST_CASE("HH(R, End M) and Ext_R(M, M) have equal dimensions") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  for (const SmashModule& m : {ground(act), algebra_as_module(act)}) {
    ExtPipeline pl(act, m, {4, "auto", false});
    HHRing ext = pl.ring(3);
    HHRing hh = hh_ring(pl.hochschild().double_complex(), 3);
    CHECK(ext.dims() == hh.dims());
    ExtOracle oracle(m, 3);
    CHECK(ext.dims() == oracle.ring().dims());
  }
}

TEST_CASE("free module has Ext in degree 0 only") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  ExtPipeline pl(act, regular_module(act), {3, "auto", false});
  CHECK(pl.ring(2).dims() == std::vector<int>{4, 0, 0});
}

TEST_CASE("Ext between different characters") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  SmashModule k = ground(act);
  SmashModule sgn = smash_module(act, {Matrix::identity(Q, 1), Matrix(Q, 1, 1)},
                                 {Matrix::identity(Q, 1), Matrix::from_ints(Q, {{-1}})});
  CHECK(ext_pair_dims(act, k, k, 3) == std::vector<int>{1, 0, 1, 0});
  CHECK(ext_pair_dims(act, k, sgn, 3) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("group cohomology oracle") {
  CHECK(group_cohomology_oracle(cyclic_group(2), F2, 3).dims() == std::vector<int>{1, 1, 1, 1});
  CHECK(group_cohomology_oracle(cyclic_group(2), Q, 3).dims() == std::vector<int>{1, 0, 0, 0});
  CHECK(group_cohomology_oracle(cyclic_group(3), F3, 3).dims() == std::vector<int>{1, 1, 1, 1});
  CohomologyRing z2 = group_cohomology_oracle(cyclic_group(2), F2, 3);
  CHECK_FALSE(is_zero(z2.product(1, 0, 2, 0)));
  GroupCochains c(symmetric_group_3(), F2, 3);
  CHECK(c.complex().validate().empty());
  CHECK(check_leibniz(c, 2).empty());
}

TEST_CASE("S3 as a semidirect product") {
  SemidirectData s3 = s3_as_semidirect();
  SUBCASE("F3") {
    ModuleAlgebraAction act = lhs_action(s3.n, s3.g, s3.action, F3);
    ExtPipeline pl(act, trivial_group_module(act), {5, "auto", false});
    HHRing ring = pl.ring(4);
    CHECK(ring.dims() == std::vector<int>{1, 0, 0, 1, 1});
    CHECK(group_cohomology_oracle(symmetric_group_3(), F3, 4).dims() == ring.dims());
  }
  SUBCASE("F2") {
    ModuleAlgebraAction act = lhs_action(s3.n, s3.g, s3.action, F2);
    ExtPipeline pl(act, trivial_group_module(act), {4, "auto", false});
    HHRing ring = pl.ring(3);
    CHECK(ring.dims() == std::vector<int>{1, 1, 1, 1});
    CHECK(group_cohomology_oracle(semidirect_product(s3.n, s3.g, s3.action), F2, 3).dims() == ring.dims());
  }
  CHECK_THROWS_AS(lhs_action(s3.n, s3.g, GroupAction{{{0, 1, 2}, {1, 2, 0}}}, F2), NotAnAction);
}
