#include "doctest.h"
#include "smashcoh/resolutions/smash_complex.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();

struct Instance {
  ModuleAlgebraAction act;
  FreeBimoduleResolution k;
  FreeRightComplex l;
  Instance(ModuleAlgebraAction a, int len)
      : act(std::move(a)), k(bar_resolution(act.algebra, act, len)), l(trivial_module_resolution(act.hopf, len)) {}
};

bool all_zero_below_top(const std::vector<int>& h) {
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (h[i] != 0) return false;
  return true;
}

SparseVec e(std::int64_t i) { return SparseVec{{{i, Scalar(1)}}}; }

void check_psi(const SmashComplex& x, int top) {
  for (int n = 0; n <= top; ++n) {
    for (std::int64_t i = 0; i < x.full_dim(n); ++i) CHECK(x.psi(n, x.psi_inverse(n, e(i))) == e(i));
    for (std::int64_t f = 0; f < x.free_dim(n); ++f) {
      CHECK(x.psi_inverse(n, x.psi(n, e(f))) == e(f));
      int r, r2;
      std::int64_t v;
      x.free_decode(n, f, r, v, r2);
      SparseVec direct = x.right_R(n, x.left_R(n, e(x.generator_full(n, v)), r), r2);
      CHECK(x.psi(n, e(f)) == direct);
    }
  }
}

void check_bimodule_axioms(const SmashComplex& x, int n) {
  const FinDimAlgebra& r = x.smash();
  for (std::int64_t i = 0; i < x.full_dim(n); ++i)
    for (int s = 0; s < r.dim(); ++s)
      for (int t = 0; t < r.dim(); ++t) {
        Accumulator left, right;
        for (const auto& [k, c] : r.product(s, t).terms) {
          left.add(x.left_R(n, e(i), static_cast<int>(k)), c);
          right.add(x.right_R(n, e(i), static_cast<int>(k)), c);
        }
        CHECK(x.left_R(n, x.left_R(n, e(i), t), s) == left.finish());
        CHECK(x.right_R(n, x.right_R(n, e(i), s), t) == right.finish());
        CHECK(x.right_R(n, x.left_R(n, e(i), s), t) == x.left_R(n, x.right_R(n, e(i), t), s));
      }
}

}  // namespace

TEST_CASE("smash complex for the sign action") {
  Instance in(sign_action_on_dual_numbers(Q), 3);
  SmashComplex x(in.k, in.l, 3);
  CHECK(x.smash().dim() == 4);
  CHECK(x.base_dim(1) == 4);
  ModuleComplex c = x.to_complex(true);
  CHECK(c.validate().empty());
  CHECK(all_zero_below_top(homology_dims(c)));
  check_psi(x, 2);
  check_bimodule_axioms(x, 1);
}

TEST_CASE("smash complex for H4 exercises S and S^-1") {
  Instance in(sweedler_on_dual_numbers(Q), 2);
  SmashComplex x(in.k, in.l, 2);
  CHECK(x.smash().dim() == 8);
  ModuleComplex c = x.to_complex(true);
  CHECK(c.validate().empty());
  CHECK(all_zero_below_top(homology_dims(c)));
  check_psi(x, 1);
  check_bimodule_axioms(x, 1);
}

TEST_CASE("smash complex over the ground field is the induced complex") {
  HopfAlgebra z2 = group_algebra(cyclic_group(2), Q);
  FinDimAlgebra k = truncated_polynomial(Q, 1);
  ModuleAlgebraAction act = trivial_action(z2, k);
  FreeBimoduleResolution bar = bar_resolution(k, act, 2, true);
  FreeRightComplex l = trivial_module_resolution(z2, 2);
  SmashComplex x(bar, l, 2);
  InducedComplex up(l);
  for (int n = 0; n <= 2; ++n) CHECK(x.full_dim(n) == up.dim(n));
}

TEST_CASE("twist phi is invertible") {
  {
    Instance in(sign_action_on_dual_numbers(Q), 2);
    SmashComplex x(in.k, in.l, 2);
    SmashSquare sq(x, 2);
    TwistSource tw(x, sq, 2);
    for (int n = 0; n <= 2; ++n) {
      for (std::int64_t w = 0; w < sq.dim(n); ++w) CHECK(tw.phi(n, tw.phi_inverse(n, e(w))) == e(w));
      for (std::int64_t z = 0; z < tw.dim(n); ++z) CHECK(tw.phi_inverse(n, tw.phi(n, e(z))) == e(z));
    }
  }
  {
    Instance in(sweedler_on_dual_numbers(Q), 1);
    SmashComplex x(in.k, in.l, 1);
    SmashSquare sq(x, 1);
    TwistSource tw(x, sq, 1);
    const int ua = x.K().algebra.unit_index();
    for (int n = 0; n <= 1; ++n) {
      for (std::int64_t w = 0; w < sq.dim(n); ++w) CHECK(tw.phi(n, tw.phi_inverse(n, e(w))) == e(w));
      for (std::int64_t z = 0; z < tw.dim(n); ++z) {
        CHECK(tw.phi_inverse(n, tw.phi(n, e(z))) == e(z));
        for (int g = 0; g < x.hopf().dim(); ++g)
          CHECK(tw.phi(n, tw.left_gamma(n, e(z), g)) == sq.act(n, tw.phi(n, e(z)), x.rindex(ua, g), -1));
      }
    }
  }
}

TEST_CASE("twist phi over a trivial Hopf algebra is a signed reshuffle") {
  ModuleAlgebraAction act = trivial_action(trivial_hopf(Q), truncated_polynomial(Q, 2));
  FreeBimoduleResolution k = bar_resolution(act.algebra, act, 2);
  FreeRightComplex l = trivial_module_resolution(act.hopf, 2);
  SmashComplex x(k, l, 2);
  SmashSquare sq(x, 2);
  TwistSource tw(x, sq, 2);
  for (int n = 0; n <= 2; ++n)
    for (std::int64_t z = 0; z < tw.dim(n); ++z) {
      SparseVec img = tw.phi(n, e(z));
      REQUIRE(img.size() == 1);
      CHECK((img.terms[0].second == Scalar(1) || img.terms[0].second == Scalar(-1)));
    }
}

TEST_CASE("smash diagonal is a chain map") {
  {
    Instance in(sign_action_on_dual_numbers(Q), 3);
    SmashComplex x(in.k, in.l, 3);
    TensorSquare t(in.l, 3);
    SmashDiagonal aw(x, t, sigma_alexander_whitney(t), 3);
    CHECK(aw.check().empty());
    SmashDiagonal lifted(x, t, sigma_lifted(t), 3);
    CHECK(lifted.check().empty());
  }
  {
    Instance in(sweedler_on_dual_numbers(Q), 2);
    SmashComplex x(in.k, in.l, 2);
    TensorSquare t(in.l, 2);
    SmashDiagonal d(x, t, sigma_lifted(t), 2);
    CHECK(d.check().empty());
  }
}
