#include <benchmark/benchmark.h>

#include "gtm/closedform.hpp"
#include "gtm/language.hpp"
#include "gtm/richness.hpp"
#include "gtm/wordgen.hpp"

namespace {

void BM_DigitSumPrefix(benchmark::State& state) {
    const auto p = gtm::Params::make(3, 4);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gtm::gtm_prefix(p, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DigitSumPrefix)->Range(1 << 10, 1 << 20);

void BM_FixedPointPrefix(benchmark::State& state) {
    const auto p = gtm::Params::make(3, 4);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gtm::fixed_point_prefix(p, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FixedPointPrefix)->Range(1 << 10, 1 << 20);

// Cold language, one level with its extensions.
void BM_LanguageLevel(benchmark::State& state) {
    const auto p = gtm::Params::make(2, 4);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const gtm::Language lang(p);
        benchmark::DoNotOptimize(lang.level(n));
    }
}
BENCHMARK(BM_LanguageLevel)->RangeMultiplier(2)->Range(8, 256);

void BM_RichnessReport(benchmark::State& state) {
    const auto p = gtm::Params::make(3, 5);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const gtm::Language lang(p);
        benchmark::DoNotOptimize(gtm::richness_report(lang, n));
    }
}
BENCHMARK(BM_RichnessReport)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FormulaComplexity(benchmark::State& state) {
    const auto p = gtm::Params::make(2, 3);
    std::uint64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gtm::formula_complexity(p, n));
        n = n * 7 + 3;
        if (n > (std::uint64_t{1} << 40)) n = 1;
    }
}
BENCHMARK(BM_FormulaComplexity);

}  // namespace
BENCHMARK_MAIN();
