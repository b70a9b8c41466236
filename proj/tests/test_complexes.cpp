#include "doctest.h"
#include "smashcoh/complexes/dg_algebra.hpp"
#include "smashcoh/complexes/double_complex.hpp"
#include "smashcoh/hopf/algebra.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();

SparseMatrix sparse(const Matrix& m) { return SparseMatrix::from_dense(m); }

// A concentrated in degree 0 with left and right regular actions.
ModuleComplex regular(const FinDimAlgebra& a) {
  ModuleComplex c(a.field(), 0, {a.dim()}, -1);
  ActionFamily left{"left:A", {{}}}, right{"right:A", {{}}};
  for (int i = 0; i < a.dim(); ++i) {
    left.ops[0].push_back(sparse(a.left_mult(i)));
    right.ops[0].push_back(sparse(a.right_mult(i)));
  }
  c.add_family(left);
  c.add_family(right);
  return c;
}

// Polynomial cochains k[t] truncated at degree 3 with zero differential.
struct PolyDg : DgAlgebra {
  ModuleComplex c{Q, 0, {1, 1, 1, 1}, 1};
  PolyDg() { c.trusted_hi = 3; }
  const ModuleComplex& complex() const override { return c; }
  Vec product(int, const Vec& x, int, const Vec& y) const override { return {x[0] * y[0]}; }
};

}  // namespace

TEST_CASE("hom complex over an algebra") {
  ModuleComplex k(Q, 0, {1}, -1);
  HomComplex hk = hom_complex(k, k, {});
  CHECK(hk.complex.dim(0) == 1);

  FinDimAlgebra a = truncated_polynomial(Q, 2);
  ModuleComplex r = regular(a);
  HomComplex left_maps = hom_complex(r, r, {"left:A"});
  CHECK(left_maps.complex.dim(0) == 2);
  HomComplex bimodule_maps = hom_complex(r, r, {"left:A", "right:A"});
  CHECK(bimodule_maps.complex.dim(0) == 2);

  FinDimAlgebra m2 = matrix_algebra(Q, 2);
  ModuleComplex r2 = regular(m2);
  CHECK(hom_complex(r2, r2, {"left:A", "right:A"}).complex.dim(0) == 1);
  CHECK(hom_complex(r2, r2, {"left:A"}).complex.dim(0) == 4);
}

TEST_CASE("hom complex differential squares to zero") {
  ModuleComplex x(Q, 0, {2, 2, 1}, -1);
  x.set_differential(1, sparse(Matrix::from_ints(Q, {{1, 0}, {1, 0}})));
  x.set_differential(2, sparse(Matrix::from_ints(Q, {{0}, {1}})));
  REQUIRE(x.validate().empty());
  HomComplex h = hom_complex(x, x, {});
  CHECK(h.complex.validate().empty());
  CHECK(homology_dims(h.complex) == std::vector<int>{0, 0, 1, 0, 0});
}

TEST_CASE("homology of simple complexes") {
  ModuleComplex exact(Q, 0, {1, 1}, -1);
  exact.set_differential(1, sparse(Matrix::identity(Q, 1)));
  CHECK(homology_dims(exact) == std::vector<int>{0, 0});

  ModuleComplex zero(Q, 0, {2, 3}, 1);
  CHECK(homology_dims(zero) == std::vector<int>{2, 3});

  Homology h = homology(zero, 1);
  CHECK(h.dim() == 3);
  CHECK(h.classify(h.representatives[1]) == unit_vec(Q, 3, 1));
}

TEST_CASE("tensor over an algebra") {
  FinDimAlgebra a = truncated_polynomial(Q, 2);
  ModuleComplex r = regular(a);
  TensorComplex t = tensor_over_algebra(r, "right:A", r, "left:A");
  CHECK(t.complex.dim(0) == 2);
  CHECK(t.complex.has_family("left:A"));
  CHECK(t.complex.has_family("right:A"));

  // Tor^A(k, k) for A = k[x]/(x^2): free resolution A <- A <- A with d = x.
  ModuleComplex res(Q, 0, {2, 2, 2, 2}, -1);
  ActionFamily left{"left:A", {}};
  for (int n = 0; n < 4; ++n) {
    if (n > 0) res.set_differential(n, sparse(a.right_mult(1)));
    left.ops.push_back({sparse(a.left_mult(0)), sparse(a.left_mult(1))});
  }
  res.add_family(left);
  REQUIRE(res.validate().empty());
  ModuleComplex k(Q, 0, {1}, -1);
  k.add_family(ActionFamily{"right:A", {{sparse(Matrix::identity(Q, 1)), SparseMatrix(Q, 1, 1)}}});
  TensorComplex tor = tensor_over_algebra(k, "right:A", res, "left:A");
  CHECK(homology_dims(tor.complex) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("total complex and filtrations") {
  DoubleComplex dc(Q, 2, {{1, 1, 1}, {1, 1}, {1}});
  dc.dh[0][0] = sparse(Matrix::identity(Q, 1));
  TotalComplex t(dc);
  CHECK(t.complex().dim(1) == 2);
  CHECK(homology(t.complex(), 0).dim() == 0);
  CHECK(graded_cohomology_dims(t, 1, Filtration::column) == std::vector<int>{1, 0});
  CHECK(graded_cohomology_dims(t, 1, Filtration::row) == std::vector<int>{0, 1});
  CHECK(t.filtration(1, Filtration::column, 1).dim() == 1);
}

TEST_CASE("non-commuting square is rejected") {
  DoubleComplex dc(Q, 2, {{1, 1, 1}, {1, 1}, {1}});
  dc.dh[0][0] = sparse(Matrix::identity(Q, 1));
  dc.dv[0][0] = sparse(Matrix::identity(Q, 1));
  dc.dh[0][1] = sparse(Matrix::identity(Q, 1));
  dc.dv[1][0] = sparse(Matrix::identity(Q, 1).scaled(2));
  CHECK_THROWS_AS(TotalComplex{dc}, SquareCheckFailed);
}

TEST_CASE("cohomology ring of a toy dg algebra") {
  PolyDg a;
  CHECK(check_leibniz(a, 2).empty());
  CohomologyRing ring = cohomology_ring(a, 3);
  CHECK(ring.dims() == std::vector<int>{1, 1, 1, 1});
  CHECK(ring.product(1, 0, 2, 0) == Vec{Scalar(1)});
  CHECK_THROWS_AS(cohomology_ring(a, 4), std::invalid_argument);
}
