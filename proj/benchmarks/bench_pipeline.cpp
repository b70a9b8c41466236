#include <benchmark/benchmark.h>

#include "smashcoh/ext/ext_pipeline.hpp"
#include "smashcoh/ext/group_cohomology.hpp"
#include "smashcoh/ext/lhs.hpp"
#include "smashcoh/spectral/spectral_sequence.hpp"

using namespace smashcoh;

namespace {

const Field Q = Field::rationals();

void BM_RankRational(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 7;
  Matrix m(Q, n, n);
  for (int i = 0; i < n; ++i) m.set_col(i, random_vector(Q, n, seed));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(16)->Arg(32)->Arg(64);

void BM_PipelineSignAction(benchmark::State& state) {
  int top = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HHPipeline pl(sign_action_on_dual_numbers(Q), {top, false, "auto", std::nullopt, true});
    benchmark::DoNotOptimize(pl.xi().check_isomorphism());
  }
}
BENCHMARK(BM_PipelineSignAction)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DoubleComplexRing(benchmark::State& state) {
  int maxdeg = static_cast<int>(state.range(0));
  HHPipeline pl(sweedler_on_dual_numbers(Q), {maxdeg + 1, false, "auto", std::nullopt, false});
  for (auto _ : state) benchmark::DoNotOptimize(hh_ring(pl.double_complex(), maxdeg).dims());
}
BENCHMARK(BM_DoubleComplexRing)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HHOracle(benchmark::State& state) {
  int maxdeg = static_cast<int>(state.range(0));
  AlgebraExtension ext = identity_extension(smash_product(sign_action_on_dual_numbers(Q)));
  for (auto _ : state) benchmark::DoNotOptimize(hh_oracle(ext, maxdeg).dims());
}
BENCHMARK(BM_HHOracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SpectralPages(benchmark::State& state) {
  int maxdeg = static_cast<int>(state.range(0));
  HHPipeline pl(sign_action_on_dual_numbers(Q), {maxdeg + 2, false, "auto", std::nullopt, false});
  const auto& dc = pl.double_complex();
  for (auto _ : state) {
    SpectralSequence ss(dc.total(), &dc, Filtration::column, maxdeg + 2, maxdeg);
    benchmark::DoNotOptimize(ss.einfty_table());
  }
}
BENCHMARK(BM_SpectralPages)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LHS(benchmark::State& state) {
  SemidirectData s3 = s3_as_semidirect();
  Field f = Field::prime(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lhs_specialize(s3.n, s3.g, s3.action, f, 3).oracle);
}
BENCHMARK(BM_LHS)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GroupCohomologyOracle(benchmark::State& state) {
  Field f = Field::prime(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(group_cohomology_oracle(symmetric_group_3(), f, static_cast<int>(state.range(0))).dims());
}
BENCHMARK(BM_GroupCohomologyOracle)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
