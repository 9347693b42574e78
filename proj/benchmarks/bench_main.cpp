#include <benchmark/benchmark.h>

#include <random>

#include "singk/assembly.hpp"
#include "singk/characters.hpp"
#include "singk/intlat.hpp"
#include "singk/localsing.hpp"
#include "singk/presets.hpp"

namespace {

void BM_CloseGroup(benchmark::State& state, const char* name) {
  const singk::Preset p = singk::find_preset(name);
  for (auto _ : state) benchmark::DoNotOptimize(singk::close_group(p.generators));
}
BENCHMARK_CAPTURE(BM_CloseGroup, E7, "E7");
BENCHMARK_CAPTURE(BM_CloseGroup, E8, "E8");

void BM_CharacterTable(benchmark::State& state, const char* name) {
  const auto g = singk::find_preset(name).group();
  for (auto _ : state) benchmark::DoNotOptimize(singk::character_table(g));
}
BENCHMARK_CAPTURE(BM_CharacterTable, D9, "D9");
BENCHMARK_CAPTURE(BM_CharacterTable, E8, "E8");

void BM_LocalPipeline(benchmark::State& state, const char* name) {
  const auto model = singk::find_preset(name).model();
  for (auto _ : state) benchmark::DoNotOptimize(singk::ksg0_local(model));
}
BENCHMARK_CAPTURE(BM_LocalPipeline, E8, "E8");

void BM_CyclicFastPath(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singk::ksg0_cyclic(m, {1, 1, 1}));
}
BENCHMARK(BM_CyclicFastPath)->Arg(8)->Arg(32)->Arg(64);

void BM_CyclicMatrixPath(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  const auto model = singk::LocalModel::cyclic(m, {1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(singk::ksg0_local(model));
}
BENCHMARK(BM_CyclicMatrixPath)->Arg(8)->Arg(32);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long> d(-50, 50);
  singk::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(singk::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(30)->Arg(60);

void BM_WeightedProjective(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(singk::wps_report({2, 3, 5, 7}));
}
BENCHMARK(BM_WeightedProjective);

}  // namespace
BENCHMARK_MAIN();
