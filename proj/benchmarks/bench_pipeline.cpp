#include <benchmark/benchmark.h>

#include <autgroup/autgroup.hpp>

#include <string>

using namespace autgroup;

namespace {

MealyAutomaton fixture(const char* name) {
  return load_automaton(std::string(AUTGROUP_FIXTURE_DIR) + "/" + name + ".aut");
}

const char* const kFixtures[] = {"example", "example_abc", "adding_machine", "grigorchuk"};

void BM_AnalyzeBounded(benchmark::State& state) {
  const auto a = fixture(kFixtures[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_bounded(a));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_AnalyzeBounded)->DenseRange(0, 3);

void BM_PostCriticalSet(benchmark::State& state) {
  const auto a = fixture("example");
  for (auto _ : state) benchmark::DoNotOptimize(analyze_post_critical(a));
}
BENCHMARK(BM_PostCriticalSet);

void BM_DecideFinite(benchmark::State& state) {
  const auto an = analyze_bounded(fixture("example"));
  for (auto _ : state) benchmark::DoNotOptimize(decide_finite(an));
}
BENCHMARK(BM_DecideFinite);

void BM_LevelTable(benchmark::State& state) {
  const auto a = fixture("example");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::LevelTable(a, n));
}
BENCHMARK(BM_LevelTable)->DenseRange(2, 8, 2);

void BM_CrossCheck(benchmark::State& state) {
  const auto an = analyze_bounded(fixture("grigorchuk"));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::cross_check(an, n));
}
BENCHMARK(BM_CrossCheck)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateGroup(benchmark::State& state) {
  const auto a = fixture("adding_machine");
  const auto cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_group(a, cap));
}
BENCHMARK(BM_EnumerateGroup)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
