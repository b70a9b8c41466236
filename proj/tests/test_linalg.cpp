#include <random>

#include "doctest.h"
#include "smashcoh/linalg/elimination.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

Matrix random_matrix(const Field& f, int r, int c, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, f.from_int(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = Scalar::rational(1, 3), b = Scalar::rational(1, 6);
  CHECK(a + b == Scalar::rational(1, 2));
  CHECK((a * b).to_string() == "1/18");
  CHECK((a / b) == Scalar(2));
  Scalar big = Scalar(std::int64_t{1} << 62);
  Scalar sq = big * big;
  CHECK(sq.to_string() == "21267647932558653966460912964485513216");
  CHECK((sq / big) == big);
  Field f5 = Field::prime(5);
  CHECK(f5.from_int(3) * f5.from_int(2) == f5.one());
  CHECK(f5.from_int(2).inverse() == f5.from_int(3));
  CHECK(f5.parse("(2 mod 5)") == f5.from_int(2));
  CHECK(f5.parse("1/2") == f5.from_int(3));
  CHECK(Q.parse("-3/7") == Scalar::rational(-3, 7));
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(f5.from_int(1) + Field::prime(3).from_int(1), FieldMismatch);
  CHECK(f5.from_int(4) + Scalar(1) == f5.zero());
}

TEST_CASE("rref examples") {
  auto [r1, p1] = rref(Matrix::identity(Q, 2));
  CHECK(r1 == Matrix::identity(Q, 2));
  CHECK(p1 == std::vector<int>{0, 1});

  auto [r2, p2] = rref(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  CHECK(r2 == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  CHECK(p2 == std::vector<int>{0});

  auto [r3, p3] = rref(Matrix::from_ints(F2, {{1, 1}, {1, 1}}));
  CHECK(r3 == Matrix::from_ints(F2, {{1, 1}, {0, 0}}));
  CHECK(p3.size() == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).dim() == 0);
  CHECK(kernel_basis(Matrix(Q, 3, 3)).dim() == 3);
  Subspace k = kernel_basis(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  CHECK(k == Subspace::span(Q, 2, std::vector<Vec>{{Scalar(-2), Scalar(1)}}));
}

TEST_CASE("solve examples") {
  Vec v{Scalar(3), Scalar::rational(1, 2)};
  CHECK(solve(Matrix::identity(Q, 2), v) == v);
  Matrix m = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
  Vec x = solve(m, Vec{Scalar(1), Scalar(2)});
  CHECK(x[0] + Scalar(2) * x[1] == Scalar(1));
  CHECK_THROWS_AS(solve(m, Vec{Scalar(1), Scalar(0)}), NoSolution);
}

TEST_CASE("quotient examples") {
  Subspace V = Subspace::full(Q, 2);
  auto q0 = quotient_data(V, V);
  CHECK(q0.dim() == 0);
  auto q1 = quotient_data(V, Subspace(Q, 2));
  CHECK(q1.dim() == 2);
  CHECK(q1.project(Vec{Scalar(5), Scalar(7)}) == Vec{Scalar(5), Scalar(7)});
  Subspace diag = Subspace::span(Q, 2, std::vector<Vec>{{Scalar(1), Scalar(1)}});
  auto q2 = quotient_data(V, diag);
  REQUIRE(q2.dim() == 1);
  CHECK(q2.project({Scalar(0), Scalar(1)}) == scaled(q2.project({Scalar(1), Scalar(0)}), Scalar(-1)));
  CHECK(is_zero(q2.project({Scalar(1), Scalar(1)})));
  CHECK_THROWS_AS(quotient_data(diag, V), NotASubspace);
}

TEST_CASE("tensor examples") {
  CHECK(tensor(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
  CHECK(tensor(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{3}})) == Matrix::from_ints(Q, {{6}}));
  std::mt19937 rng(7);
  Matrix a = random_matrix(Q, 2, 3, rng), b = random_matrix(Q, 3, 2, rng), c = random_matrix(Q, 2, 2, rng);
  CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
}

TEST_CASE("property: rank plus nullity") {
  std::mt19937 rng(11);
  for (const Field& f : {Q, F2, Field::prime(3)}) {
    for (int t = 0; t < 40; ++t) {
      int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
      Matrix m = random_matrix(f, r, c, rng, -2, 2);
      Subspace k = kernel_basis(m);
      CHECK(rank(m) + k.dim() == c);
      for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
      CHECK(rank(SparseMatrix::from_dense(m)) == rank(m));
    }
  }
}

TEST_CASE("property: solve is exact") {
  std::mt19937 rng(12);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(Q, 4, 5, rng);
    Vec x0(5);
    for (auto& s : x0) s = Scalar(static_cast<int>(rng() % 7) - 3);
    Vec target = m.apply(x0);
    Vec x = solve(m, target);
    CHECK(m.apply(x) == target);
  }
}

TEST_CASE("property: quotient dimension and projection") {
  std::mt19937 rng(13);
  for (int t = 0; t < 30; ++t) {
    Matrix gens = random_matrix(Q, 6, 4, rng);
    Subspace amb = Subspace::image(gens);
    Subspace sub = Subspace::image(gens.block(0, 0, 6, 2));
    auto q = quotient_data(amb, sub);
    CHECK(q.dim() == amb.dim() - sub.dim());
    for (const auto& s : sub.basis()) CHECK(is_zero(q.project(s)));
    for (int i = 0; i < q.dim(); ++i) CHECK(q.project(q.representatives[i]) == unit_vec(Q, q.dim(), i));
  }
}

TEST_CASE("property: tensor on basis pairs, exhaustive up to 4x4") {
  std::mt19937 rng(14);
  for (int r1 = 1; r1 <= 4; ++r1)
    for (int c1 = 1; c1 <= 4; ++c1) {
      Matrix m1 = random_matrix(Q, r1, c1, rng);
      Matrix m2 = random_matrix(Q, 1 + (r1 + c1) % 4, 1 + r1 % 4, rng);
      Matrix t = tensor(m1, m2);
      for (int i = 0; i < c1; ++i)
        for (int j = 0; j < m2.cols(); ++j) {
          Vec e(static_cast<std::size_t>(c1 * m2.cols()));
          e[i * m2.cols() + j] = Scalar(1);
          Vec lhs = t.apply(e);
          Vec a = m1.col(i), b = m2.col(j);
          for (int k = 0; k < r1; ++k)
            for (int l = 0; l < m2.rows(); ++l) CHECK(lhs[k * m2.rows() + l] == a[k] * b[l]);
        }
    }
}

TEST_CASE("subspace intersection and sum") {
  Subspace a = Subspace::span(Q, 3, std::vector<Vec>{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}});
  Subspace b = Subspace::span(Q, 3, std::vector<Vec>{{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}});
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.intersect(b).contains(Vec{Scalar(0), Scalar(2), Scalar(0)}));
}
