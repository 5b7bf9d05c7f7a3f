#include <benchmark/benchmark.h>

#include "orbitcalc/formulas.hpp"
#include "orbitcalc/geometry.hpp"

using namespace orbitcalc;

namespace {

void BM_EnumerateClans(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_clans(p, p));
}
BENCHMARK(BM_EnumerateClans)->DenseRange(2, 5);

void BM_BuildPosetTypeA(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const CaseId cs = CaseId::make(CaseTag::A_GLpq, p, p);
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(cs));
}
BENCHMARK(BM_BuildPosetTypeA)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BuildPosetSO8(benchmark::State& state) {
  const CaseId cs = CaseId::make(CaseTag::D_SO_OevenxOeven, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(cs, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildPosetSO8)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassTable(benchmark::State& state) {
  const CaseId cases[] = {CaseId::make(CaseTag::A_GLpq, 2, 2), CaseId::make(CaseTag::B_SO_OxO, 2, 1),
                          CaseId::make_n(CaseTag::D_SO_GL, 3), CaseId::make(CaseTag::C_SpxSp, 2, 2)};
  const CaseId cs = cases[state.range(0)];
  const OrbitPoset P = build_poset(cs);
  state.SetLabel(cs.group_name());
  for (auto _ : state) benchmark::DoNotOptimize(all_classes(P));
}
BENCHMARK(BM_ClassTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Localization(benchmark::State& state) {
  const OrbitPoset P = build_poset(CaseId::make(CaseTag::B_SO_OxO, 2, 1));
  const ClassTable t = all_classes(P);
  for (auto _ : state) benchmark::DoNotOptimize(verify_localization(P, t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Localization)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Delta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeylElement id = WeylElement::identity(RootType::C, n);
  for (auto _ : state) benchmark::DoNotOptimize(delta(n, id, n));
}
BENCHMARK(BM_Delta)->DenseRange(2, 5);

void BM_GeometricOracle(benchmark::State& state) {
  const auto clans = enumerate_clans(2, 2);
  for (auto _ : state)
    for (const auto& g : clans) {
      const Flag f = representative_flag(g);
      for (const auto& t : clans) benchmark::DoNotOptimize(in_closure(f, t));
    }
}
BENCHMARK(BM_GeometricOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
