#include <random>

#include "doctest.h"
#include "smashcoh/resolutions/bimodule_resolution.hpp"
#include "smashcoh/resolutions/right_resolution.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();

bool all_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

HopfAlgebra z2(const Field& f = Q) { return group_algebra(cyclic_group(2), f); }

}  // namespace

TEST_CASE("bar resolution of the ground field") {
  FinDimAlgebra k = truncated_polynomial(Q, 1);
  FreeBimoduleResolution bar = bar_resolution(k, std::nullopt, 4);
  ModuleComplex c = bimodule_complex(bar, false);
  for (int n = 0; n <= 4; ++n) CHECK(c.dim(n) == 1);
  CHECK(c.d(1).is_zero());
  CHECK(c.d(2).to_dense() == Matrix::identity(Q, 1));
  CHECK(c.d(3).is_zero());
}

TEST_CASE("bar resolution of the dual numbers") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  FreeBimoduleResolution bar = bar_resolution(act.algebra, act, 4);
  ModuleComplex c = bimodule_complex(bar, true);
  for (int n = 0; n <= 4; ++n) CHECK(c.dim(n) == 4 << n);
  CHECK(c.validate().empty());
  auto h = homology_dims(c);
  CHECK(all_zero(std::vector<int>(h.begin(), h.end() - 1)));

  FreeBimoduleResolution nbar = bar_resolution(act.algebra, act, 4, true);
  ModuleComplex nc = bimodule_complex(nbar, true);
  CHECK(nc.dim(3) == 4);
  CHECK(nc.validate().empty());
  auto nh = homology_dims(nc);
  CHECK(all_zero(std::vector<int>(nh.begin(), nh.end() - 1)));
}

TEST_CASE("bar resolution with a Hopf action exercising the antipode") {
  ModuleAlgebraAction act = sweedler_on_dual_numbers(Q);
  FreeBimoduleResolution bar = bar_resolution(act.algebra, act, 3);
  ModuleComplex c = bimodule_complex(bar, true);
  CHECK(c.validate().empty());
  auto h = homology_dims(c);
  CHECK(all_zero(std::vector<int>(h.begin(), h.end() - 1)));
}

TEST_CASE("bar diagonal satisfies condition III") {
  for (const auto& act : {sign_action_on_dual_numbers(Q), sweedler_on_dual_numbers(Q)}) {
    FreeBimoduleResolution bar = bar_resolution(act.algebra, act, 3);
    DiagonalTarget t(bar, 3);
    CHECK(check_condition_three(t).empty());
    CHECK(t.omega(1, 1).size() == 2);
    CHECK(t.omega(0, 0) == SparseVec{{{0, Scalar(1)}}});
  }
}

TEST_CASE("lifted diagonal is homotopic to the bar diagonal") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  FreeBimoduleResolution bar = bar_resolution(act.algebra, act, 3);
  DiagonalTarget t(bar, 3);
  FreeMap lifted = lift_diagonal(t);
  FreeMap closed;
  for (int q = 0; q <= 3; ++q) {
    closed.emplace_back();
    for (std::int64_t m = 0; m < bar.base_dim(q); ++m) closed[q].push_back(t.omega(q, m));
  }
  LiftTarget lt = t.lift_target();
  FreeMap h = lift_homotopy(bar.free_source(), lt, lifted, closed, 2);
  FreeSource src = bar.free_source();
  for (int q = 1; q <= 2; ++q)
    for (std::int64_t m = 0; m < bar.base_dim(q); ++m) {
      Accumulator acc;
      for (const auto& [x, c] : h[q][m].terms) acc.add(t.differential_full(q + 1, x), c);
      acc.add(apply_free(h, lt, q - 1, q, src.boundary(q, m)));
      acc.add(closed[q][m]);
      acc.add(lifted[q][m], Scalar(-1));
      CHECK(acc.finish().empty());
    }
}

TEST_CASE("trivial module resolution") {
  FreeRightComplex k = trivial_module_resolution(trivial_hopf(Q), 4);
  ModuleComplex kc = right_complex(k, false);
  CHECK(kc.d(1).is_zero());
  CHECK(kc.d(2).to_dense() == Matrix::identity(Q, 1));

  FreeRightComplex l = trivial_module_resolution(z2(), 4);
  ModuleComplex c = right_complex(l, true);
  for (int n = 0; n <= 4; ++n) CHECK(c.dim(n) == 2 << n);
  CHECK(c.validate().empty());
  auto h = homology_dims(c);
  CHECK(all_zero(std::vector<int>(h.begin(), h.end() - 1)));

  FreeRightComplex l4 = trivial_module_resolution(sweedler_h4(Q), 3);
  ModuleComplex c4 = right_complex(l4, true);
  CHECK(c4.validate().empty());
  auto h4 = homology_dims(c4);
  CHECK(all_zero(std::vector<int>(h4.begin(), h4.end() - 1)));
}

TEST_CASE("Alexander-Whitney and lifted diagonals of L") {
  for (const Field& f : {Q, Field::prime(2)}) {
    FreeRightComplex l = trivial_module_resolution(z2(f), 4);
    TensorSquare t(l, 4);
    LDiagonal aw = sigma_alexander_whitney(t);
    LDiagonal lifted = sigma_lifted(t);
    CHECK(check_sigma(t, aw).empty());
    CHECK(check_sigma(t, lifted).empty());
    CHECK_NOTHROW(lift_homotopy(l.free_source(), t.lift_target(), aw.map, lifted.map, 3));
  }
  FreeRightComplex l3 = trivial_module_resolution(group_algebra(symmetric_group_3(), Q), 2);
  TensorSquare t3(l3, 2);
  CHECK(check_sigma(t3, sigma_alexander_whitney(t3)).empty());

  FreeRightComplex l4 = trivial_module_resolution(sweedler_h4(Q), 3);
  TensorSquare t4(l4, 3);
  CHECK_THROWS_AS(sigma_alexander_whitney(t4), std::invalid_argument);
  CHECK(check_sigma(t4, sigma_lifted(t4)).empty());
}

TEST_CASE("induced complex matches the generic tensor construction") {
  HopfAlgebra h = z2();
  FreeRightComplex l = trivial_module_resolution(h, 3);
  InducedComplex up(l);
  ModuleComplex lc = right_complex(l, false);
  FinDimAlgebra ge = enveloping(h.algebra());
  Matrix tw = twisted_diagonal(h);
  ModuleComplex gamma_e(Q, 0, {ge.dim()}, -1);
  ActionFamily left{"left:Gamma", {{}}};
  for (int g = 0; g < h.dim(); ++g) left.ops[0].push_back(SparseMatrix::from_dense(ge.left_mult(tw.col(g))));
  gamma_e.add_family(left);
  TensorComplex tc = tensor_over_algebra(lc, "right:Gamma", gamma_e, "left:Gamma");
  ModuleComplex upc = up.to_complex(false);
  for (int p = 0; p <= 3; ++p) CHECK(tc.complex.dim(p) == upc.dim(p));
  CHECK(homology_dims(tc.complex) == homology_dims(upc));
  CHECK(upc.validate().empty());

  // k^ = k (x)_Gamma Gamma^e is Gamma via 1 (x) (g (x) g') -> g g'.
  ModuleComplex k(Q, 0, {1}, -1);
  ActionFamily eps{"right:Gamma", {{}}};
  for (int g = 0; g < h.dim(); ++g)
    eps.ops[0].push_back(SparseMatrix::from_dense(Matrix::identity(Q, 1).scaled(h.counit()[g])));
  k.add_family(eps);
  CHECK(tensor_over_algebra(k, "right:Gamma", gamma_e, "left:Gamma").complex.dim(0) == h.dim());
}

TEST_CASE("induced complexes are Hopf bimodule complexes") {
  for (const HopfAlgebra& h : {z2(), sweedler_h4(Q)}) {
    const int d = h.dim();
    FreeRightComplex l = trivial_module_resolution(h, 2);
    InducedComplex up(l);
    CHECK(up.to_complex(true).validate().empty());
    auto upc = up.to_complex(true);
    auto hd = homology_dims(upc);
    CHECK(all_zero(std::vector<int>(hd.begin(), hd.end() - 1)));
    for (int p = 0; p <= 2; ++p) {
      std::int64_t r = l.base_dim(p), n = up.dim(p);
      for (std::int64_t x = 0; x < n; ++x) {
        SparseVec rho = up.coaction(p, x);
        // counit law
        Accumulator counit;
        for (const auto& [y, c] : rho.terms) counit.add(y % n, c * h.counit()[y / n]);
        CHECK(counit.finish() == SparseVec{{{x, Scalar(1)}}});
        // coassociativity
        Accumulator lhs, rhs;
        for (const auto& [y, c] : rho.terms) {
          for (const auto& [z, cz] : h.coproduct(static_cast<int>(y / n)).terms) lhs.add(z * n + y % n, c * cz);
          for (const auto& [z, cz] : up.coaction(p, y % n).terms) rhs.add((y / n) * d * n + z, c * cz);
        }
        CHECK(lhs.finish() == rhs.finish());
        // rho(m g) = m_{-1} g_1 (x) m_0 g_2 and rho(g m) = g_1 m_{-1} (x) g_2 m_0
        for (int g = 0; g < d; ++g) {
          Accumulator right_l, right_r, left_l, left_r;
          for (const auto& [y, c] : induced::right(h, r, SparseVec{{{x, Scalar(1)}}}, g).terms)
            right_l.add(up.coaction(p, y), c);
          for (const auto& [y, c] : induced::left(h, r, SparseVec{{{x, Scalar(1)}}}, g).terms)
            left_l.add(up.coaction(p, y), c);
          for (const auto& [y, c] : rho.terms)
            for (const auto& [gi, cg] : h.coproduct(g).terms) {
              int g1 = static_cast<int>(gi / d), g2 = static_cast<int>(gi % d);
              SparseVec m0 = SparseVec{{{y % n, Scalar(1)}}};
              for (const auto& [k, ck] : h.algebra().product(static_cast<int>(y / n), g1).terms)
                for (const auto& [z, cz] : induced::right(h, r, m0, g2).terms) right_r.add(k * n + z, c * cg * ck * cz);
              for (const auto& [k, ck] : h.algebra().product(g1, static_cast<int>(y / n)).terms)
                for (const auto& [z, cz] : induced::left(h, r, m0, g2).terms) left_r.add(k * n + z, c * cg * ck * cz);
            }
          CHECK(right_l.finish() == right_r.finish());
          CHECK(left_l.finish() == left_r.finish());
        }
        if (p == 0) {
          // xi^ is colinear: (id (x) xi^) rho = Delta xi^
          Accumulator a, b;
          for (const auto& [y, c] : rho.terms)
            for (const auto& [k, ck] : up.xi_up(y % n).terms) a.add((y / n) * d + k, c * ck);
          for (const auto& [k, ck] : up.xi_up(x).terms) b.add(h.coproduct(static_cast<int>(k)), ck);
          CHECK(a.finish() == b.finish());
        }
      }
    }
  }
}

TEST_CASE("induced maps commute with the coaction") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const HopfAlgebra& h : {z2(), sweedler_h4(Q)}) {
    const int d = h.dim();
    const std::int64_t r = 2, s = 3;
    std::vector<std::vector<RightTerm>> images(r);
    for (auto& im : images)
      for (std::int64_t b = 0; b < s; ++b)
        for (int g = 0; g < d; ++g) im.push_back({b, g, Scalar(coef(gen))});
    SparseMatrix f = induced::induce_map(h, r, s, images);
    const std::int64_t n = d * r * d, m = d * s * d;
    for (std::int64_t x = 0; x < n; ++x) {
      Accumulator lhs, rhs;
      for (const auto& [y, c] : f.column(static_cast<int>(x)).terms) lhs.add(induced::coaction(h, s, y), c);
      for (const auto& [y, c] : induced::coaction(h, r, x).terms)
        for (const auto& [z, cz] : f.column(static_cast<int>(y % n)).terms) rhs.add((y / n) * m + z, c * cz);
      CHECK(lhs.finish() == rhs.finish());
    }
  }
}

TEST_CASE("sigma up is a map of Hopf bimodule complexes") {
  for (const HopfAlgebra& h : {z2(), sweedler_h4(Q)}) {
    FreeRightComplex l = trivial_module_resolution(h, 2);
    TensorSquare t(l, 2);
    LDiagonal s = sigma_lifted(t);
    InducedComplex up(l);
    InducedSquare sq(up, 2);
    CHECK(check_sigma_up(up, sq, t, s, 2).empty());
  }
  FreeRightComplex l = trivial_module_resolution(z2(), 3);
  TensorSquare t(l, 3);
  InducedComplex up(l);
  InducedSquare sq(up, 3);
  CHECK(check_sigma_up(up, sq, t, sigma_alexander_whitney(t), 3).empty());
}

TEST_CASE("mediating resolution") {
  ModuleAlgebraAction act = sign_action_on_dual_numbers(Q);
  FreeBimoduleResolution bar = bar_resolution(act.algebra, act, 3);
  FreeBimoduleResolution nbar = bar_resolution(act.algebra, act, 3, true);
  MediatingResolution med = mediating_resolution(bar, nbar, 3);
  ModuleComplex qc = bimodule_complex(med.q, true);
  CHECK(qc.validate().empty());
  auto h = homology_dims(qc);
  CHECK(all_zero(std::vector<int>(h.begin(), h.end() - 1)));
  CHECK(med.include_k(2).cols() == bar.base_dim(2));
  CHECK(med.include_p(2).cols() == nbar.base_dim(2));

  MediatingResolution twice = mediating_resolution(bar, bar, 2);
  CHECK(twice.q.base_dim(0) == 2);
  CHECK(bimodule_complex(twice.q, true).validate().empty());
}
