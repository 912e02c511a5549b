#include <benchmark/benchmark.h>

#include "hb/recurrence.hpp"
#include "hb/structure.hpp"

namespace {

const hb::SmirnovSymbol kSimplePole = hb::SmirnovSymbol::simple_pole(0.0, 1.0);
const hb::SmirnovSymbol kDoublePole = hb::SmirnovSymbol::pole_at_one({0.0, 1.0, 1.0});

void BM_DenseOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hb::orthopoly(kSimplePole, n, hb::Precision::f64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseOracle)->RangeMultiplier(2)->Range(32, 1024)->Complexity()->Unit(benchmark::kMillisecond);

void BM_StructuredSimplePole(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cal = hb::calibrate_structure(kSimplePole);
  for (auto _ : state) benchmark::DoNotOptimize(hb::structured_solve(kSimplePole, n, cal));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StructuredSimplePole)->RangeMultiplier(4)->Range(32, 8192)->Complexity()->Unit(benchmark::kMicrosecond);

void BM_StructuredDoublePole(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cal = hb::calibrate_structure(kDoublePole);
  for (auto _ : state) benchmark::DoNotOptimize(hb::structured_solve(kDoublePole, n, cal));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StructuredDoublePole)->RangeMultiplier(4)->Range(32, 8192)->Complexity()->Unit(benchmark::kMicrosecond);

void BM_Recurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = hb::build_recurrence(0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hb::coefficients_via_recurrence(data, n));
  state.SetComplexityN(state.range(0));
}
// lambda2^n overflows double past roughly n = 700 for this symbol.
BENCHMARK(BM_Recurrence)->RangeMultiplier(2)->Range(32, 512)->Complexity()->Unit(benchmark::kMicrosecond);

void BM_RecurrenceEscalating(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = hb::build_recurrence(0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hb::coefficients_via_recurrence(data, n, hb::Precision::automatic));
}
BENCHMARK(BM_RecurrenceEscalating)->RangeMultiplier(4)->Range(1024, 8192)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
