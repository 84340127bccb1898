#include <benchmark/benchmark.h>

#include "kcr/sweep.hpp"

namespace {

std::vector<kcr::GraphSpec> rank4_grid() {
    std::vector<kcr::GraphSpec> out;
    for (int t = 1; t <= 4; ++t)
        for (auto inv : {kcr::Involution::Trivial, kcr::Involution::Swap}) {
            const auto g = kcr::sweep::family_grid(4, t, inv, 2, 4);
            out.insert(out.end(), g.begin(), g.end());
        }
    return out;
}

void BM_VerifySerial(benchmark::State& state) {
    const auto specs = rank4_grid();
    for (auto _ : state) benchmark::DoNotOptimize(kcr::sweep::verify_instances_serial(specs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(specs.size()));
}

void BM_VerifyParallel(benchmark::State& state) {
    const auto specs = rank4_grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(kcr::sweep::verify_instances(specs, static_cast<int>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(specs.size()));
}

void BM_LemmasSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kcr::sweep::verify_lemmas_serial(4, 2, 20));
}

void BM_LemmasParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(kcr::sweep::verify_lemmas(4, 2, 20, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LemmasSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LemmasParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
