#include <benchmark/benchmark.h>

#include "hssv/chevalley.hpp"
#include "hssv/pairs.hpp"
#include "hssv/projgeo/plucker.hpp"
#include "hssv/projgeo/segre.hpp"
#include "hssv/rootsys.hpp"
#include "hssv/sff.hpp"

namespace {

const char* const kDiagrams[] = {"A4", "B4", "D5", "E6", "E7"};

void BM_RootClosure(benchmark::State& state) {
  const auto d = hssv::DynkinDiagram::parse(kDiagrams[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(hssv::build_root_system(d));
  state.SetLabel(kDiagrams[state.range(0)]);
}
BENCHMARK(BM_RootClosure)->DenseRange(0, 4);

void BM_ChevalleyTable(benchmark::State& state) {
  const auto rs = hssv::build_root_system(hssv::DynkinDiagram::parse(kDiagrams[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(hssv::build_table(rs));
  state.SetLabel(kDiagrams[state.range(0)]);
}
BENCHMARK(BM_ChevalleyTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_KernelTau(benchmark::State& state) {
  const hssv::SffContext ctx(hssv::parse_pair_id("E7:a7/a6"));
  for (auto _ : state) benchmark::DoNotOptimize(hssv::kernel_tau(ctx));
}
BENCHMARK(BM_KernelTau)->Unit(benchmark::kMillisecond);

void BM_PlueckerSurvey(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hssv::projgeo::dee_exhaustive_survey(p));
}
BENCHMARK(BM_PlueckerSurvey)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SegreFitting(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hssv::projgeo::segre_fitting(q));
}
BENCHMARK(BM_SegreFitting)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
