// One PASS/FAIL line per acceptance criterion. Every comparison is exact (zero tolerance);
// the only pinned limits are wall-clock budgets.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "smashcoh/cli/run.hpp"
#include "smashcoh/ext/ext_pipeline.hpp"
#include "smashcoh/ext/group_cohomology.hpp"
#include "smashcoh/spectral/checks.hpp"
#include "smashcoh/spectral/spectral_sequence.hpp"

using namespace smashcoh;

namespace {

constexpr double kBudgetSeconds[8] = {0, 60, 300, 600, 600, 1800, 900, 600};

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

using Failures = std::vector<std::string>;

void append(Failures& out, const std::string& tag, const Failures& more) {
  for (const auto& m : more) out.push_back(tag + ": " + m);
}

std::string dims_text(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void expect_dims(Failures& out, const std::string& tag, const std::vector<int>& got, const std::vector<int>& want) {
  if (got != want) out.push_back(tag + ": dims " + dims_text(got) + ", expected " + dims_text(want));
}

ModuleAlgebraAction z2_on(const FinDimAlgebra& a) {
  return trivial_action(group_algebra(cyclic_group(2), a.field()), a);
}

AlgebraExtension counit_extension(const ModuleAlgebraAction& act) {
  FinDimAlgebra r = smash_product(act);
  int dg = act.hopf.dim();
  Vec eps(static_cast<std::size_t>(r.dim()), act.field().zero());
  for (int g = 0; g < dg; ++g) eps[static_cast<std::size_t>(act.algebra.unit_index() * dg + g)] = act.hopf.counit()[g];
  return character_extension(r, eps);
}

bool nonzero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return true;
  return false;
}

Failures criterion1() {
  HHPipeline pl(sign_action_on_dual_numbers(Q), {4, false, "auto", std::nullopt, true});
  Failures out;
  append(out, "xi/phi", pl.xi().check_isomorphism());
  return out;
}

Failures criterion2() {
  Failures out;
  HHPipeline z2(sign_action_on_dual_numbers(Q), {3, false, "auto", std::nullopt, true});
  append(out, "Z/2", z2.xi().check_multiplicative(2));
  HHPipeline h4(sweedler_on_dual_numbers(Q), {3, false, "auto", std::nullopt, true});
  append(out, "H4", h4.xi().check_multiplicative(2));
  return out;
}

Failures criterion3() {
  Failures out;
  struct Case {
    std::string name;
    ModuleAlgebraAction act;
  };
  std::vector<Case> cases{{"sign action over Q", sign_action_on_dual_numbers(Q)},
                          {"trivial Z/2 on F2[x]/(x^2)", z2_on(truncated_polynomial(F2, 2))},
                          {"A = k, QZ/2", z2_on(truncated_polynomial(Q, 1))},
                          {"A = k, F2Z/2", z2_on(truncated_polynomial(F2, 1))}};
  for (auto& c : cases) {
    HHPipeline pl(c.act, {4, false, "auto", std::nullopt, false});
    auto ours = hh_ring(pl.double_complex(), 3).dims();
    auto oracle = hh_oracle(pl.extension(), 3).dims();
    expect_dims(out, c.name, ours, oracle);
  }
  // with coefficients in k through the counit, F2Z/2 gives the ring F2[x]
  ModuleAlgebraAction act = z2_on(truncated_polynomial(F2, 1));
  AlgebraExtension ext = counit_extension(act);
  HHPipeline pl(act, {4, false, "auto", ext, false});
  HHRing r = hh_ring(pl.double_complex(), 3);
  expect_dims(out, "F2Z/2 into k", r.dims(), {1, 1, 1, 1});
  expect_dims(out, "F2Z/2 into k oracle", hh_oracle(ext, 3).dims(), {1, 1, 1, 1});
  if (r.dims() == std::vector<int>{1, 1, 1, 1}) {
    Vec one{F2.one()};
    Vec x2 = r.ring.multiply(1, one, 1, one);
    if (!nonzero(x2)) out.push_back("x.x vanishes");
    else if (!nonzero(r.ring.multiply(2, x2, 1, one))) out.push_back("x.x.x vanishes");
  }
  return out;
}

Failures criterion4() {
  Failures out;
  for (const auto& act : {sign_action_on_dual_numbers(Q), z2_on(truncated_polynomial(Q, 1))}) {
    std::string tag = act.algebra.dim() == 1 ? "A = k" : "sign action";
    HHPipeline pl(act, {5, false, "auto", std::nullopt, false});
    const auto& dc = pl.double_complex();
    SpectralSequence ss(dc.total(), &dc, Filtration::column, 5, 3);
    auto e2 = ss.table(2), inf = ss.einfty_table();
    for (std::size_t p = 1; p < e2.size(); ++p)
      for (std::size_t q = 0; q < e2[p].size(); ++q)
        if (e2[p][q] != 0) out.push_back(tag + ": E2 nonzero at p=" + std::to_string(p) + ", q=" + std::to_string(q));
    if (e2 != inf) out.push_back(tag + ": E2 differs from E_inf");
    HHRing r = hh_ring(dc, 3);
    append(out, tag, einfty_vs_gr(ss, &r.ring));
    for (int n = 0; n <= 3; ++n) {
      int sum = 0;
      for (int p = 0; p <= n; ++p) sum += inf[p][n - p];
      if (sum != r.ring.dim(n))
        out.push_back(tag + ": sum of E_inf in degree " + std::to_string(n) + " is " + std::to_string(sum));
    }
    append(out, tag, check_column_e2(dc, ss));
  }
  return out;
}

Failures criterion5() {
  Failures out;
  SemidirectData s3 = s3_as_semidirect();
  LHSReport f3 = lhs_specialize(s3.n, s3.g, s3.action, F3, 4);
  append(out, "F3", f3.mismatches);
  expect_dims(out, "F3", f3.abutment.dims(), {1, 0, 0, 1, 1});
  expect_dims(out, "F3 oracle", f3.oracle, {1, 0, 0, 1, 1});
  LHSReport f2 = lhs_specialize(s3.n, s3.g, s3.action, F2, 3);
  append(out, "F2", f2.mismatches);
  expect_dims(out, "F2", f2.abutment.dims(), {1, 1, 1, 1});
  expect_dims(out, "F2 oracle", f2.oracle, {1, 1, 1, 1});
  return out;
}

bool acyclic_below_top(const ModuleComplex& c) {
  auto h = homology_dims(c);
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (h[i] != 0) return false;
  return true;
}

Failures resolution_suite(const ModuleAlgebraAction& act, int top) {
  Failures out;
  HHPipeline pl(act, {top, false, "auto", std::nullopt, true});
  ModuleComplex kc = bimodule_complex(pl.K(), true);
  append(out, "K", kc.validate());
  if (!acyclic_below_top(kc)) out.push_back("K: augmented complex is not exact");
  append(out, "condition III", check_condition_three(DiagonalTarget(pl.K(), top)));
  append(out, "sigma", check_sigma(pl.tensor_square(), pl.sigma()));
  LDiagonal lifted = sigma_lifted(pl.tensor_square());
  append(out, "lifted sigma", check_sigma(pl.tensor_square(), lifted));
  append(out, "smash diagonal", pl.smash_diagonal().check());
  return out;
}

Failures hochschild_suite(const ModuleAlgebraAction& act, const std::optional<AlgebraExtension>& ext, int maxdeg) {
  Failures out;
  HHPipeline pl(act, {maxdeg + 1, false, "auto", ext, true});
  append(out, "inner", pl.inner().complex().validate());
  append(out, "inner Leibniz", check_leibniz(pl.inner(), 2));
  append(out, "double complex", pl.double_complex().complex().validate());
  append(out, "double complex Leibniz", check_leibniz(pl.double_complex(), 2));
  append(out, "smash cochains Leibniz", check_leibniz(pl.smash_cochains(), 2));
  append(out, "xi", pl.xi().check_isomorphism());
  append(out, "xi products", pl.xi().check_multiplicative(2));
  HHRing dc = hh_ring(pl.double_complex(), maxdeg);
  HHOracle oracle(pl.extension(), maxdeg);
  expect_dims(out, "oracle", dc.dims(), oracle.ring().dims());
  HHRing sm = hh_ring(pl.smash_cochains(), maxdeg);
  append(out, "oracle comparison", compare_with_oracle(pl.smash_cochains(), sm, oracle));
  return out;
}

Failures ext_suite(const ModuleAlgebraAction& act, const SmashModule& m, int maxdeg) {
  Failures out;
  append(out, "module", validate_smash_module(m));
  ExtPipeline pl(act, m, {maxdeg + 1, "auto", true});
  append(out, "adjunction", pl.check_adjunction(2));
  append(out, "blockwise adjunction", pl.check_double_complex(2));
  append(out, "composite", pl.check_composite(2));
  append(out, "Yoneda Leibniz", check_leibniz(pl.yoneda(), 2));
  ExtOracle oracle(m, maxdeg);
  expect_dims(out, "Ext oracle", pl.ring(maxdeg).dims(), oracle.ring().dims());
  return out;
}

Failures spectral_suite(const GammaHomDoubleComplex& dc, int maxdeg) {
  Failures out;
  HHRing r = hh_ring(dc, maxdeg);
  for (Filtration f : {Filtration::column, Filtration::row}) {
    std::string tag = f == Filtration::column ? "column" : "row";
    SpectralSequence ss(dc.total(), &dc, f, maxdeg + 2, maxdeg);
    append(out, tag + " pages", ss.check_pages());
    append(out, tag + " E_inf", einfty_vs_gr(ss, &r.ring));
    append(out, tag + " first page", f == Filtration::column ? check_column_e2(dc, ss) : check_row_e1(dc, ss));
  }
  return out;
}

Failures criterion6() {
  Failures out;
  int seen = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(SMASHCOH_FIXTURE_DIR))
    if (e.path().extension() == ".job") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    JobSpec job = parse_job(path.string());
    std::string tag = path.filename().string();
    ++seen;
    if (job.lhs) {
      LHSReport r = lhs_specialize(job.lhs->n, job.lhs->g, job.lhs->action, job.field, std::min(job.maxdeg, 3));
      append(out, tag + " lhs", r.mismatches);
      continue;
    }
    const ModuleAlgebraAction& act = *job.action;
    append(out, tag + " hopf", validate_hopf(act.hopf));
    append(out, tag + " action", validate_action(act));
    int maxdeg = act.hopf.dim() * act.algebra.dim() > 4 ? 1 : 2;
    append(out, tag, resolution_suite(act, maxdeg + 1));
    append(out, tag, hochschild_suite(act, job.extension, maxdeg));
    std::vector<SmashModule> modules;
    if (job.module) modules.push_back(*job.module);
    std::vector<Matrix> left;
    for (int i = 0; i < act.algebra.dim(); ++i) left.push_back(act.algebra.left_mult(i));
    modules.push_back(smash_module(act, left, act.act));
    for (const auto& m : modules) append(out, tag + " ext", ext_suite(act, m, maxdeg));
    HHPipeline pl(act, {maxdeg + 2, false, "auto", job.extension, false});
    append(out, tag + " spectral", spectral_suite(pl.double_complex(), maxdeg));
    if (job.module) {
      ExtPipeline ep(act, *job.module, {maxdeg + 2, "auto", false});
      append(out, tag + " ext spectral", spectral_suite(ep.double_complex(), maxdeg));
    }
  }
  if (seen < 8) out.push_back("fixture corpus has only " + std::to_string(seen) + " jobs");
  return out;
}

Failures criterion7() {
  Failures out;
  ModuleAlgebraAction act = z2_on(truncated_polynomial(F2, 1));
  AlgebraExtension ext = counit_extension(act);
  HHPipeline aw(act, {4, false, "aw", ext, false});
  HHPipeline lifted(act, {4, false, "lifted", ext, false});
  if (aw.sigma().kind == lifted.sigma().kind) out.push_back("both pipelines used the same diagonal");
  HHRing a = hh_ring(aw.double_complex(), 3), b = hh_ring(lifted.double_complex(), 3);
  expect_dims(out, "dims", a.dims(), {1, 1, 1, 1});
  expect_dims(out, "lifted dims", b.dims(), a.dims());
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n1 + n2 <= 3; ++n2)
      for (int i = 0; i < a.ring.dim(n1); ++i)
        for (int j = 0; j < a.ring.dim(n2); ++j)
          if (a.ring.product(n1, i, n2, j) != b.ring.product(n1, i, n2, j))
            out.push_back("products differ in degrees " + std::to_string(n1) + " x " + std::to_string(n2));
  return out;
}

}  // namespace

int main() {
  std::vector<std::function<Failures()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                  criterion5, criterion6, criterion7};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = criteria[i]();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudgetSeconds[i + 1])
      f.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(kBudgetSeconds[i + 1]) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << i + 1 << ": " << (f.empty() ? "PASS" : "FAIL") << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& m : f) std::cout << "    " << m << "\n";
    if (!f.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
