#include <benchmark/benchmark.h>

#include "volgap/bounds.hpp"
#include "volgap/claims.hpp"
#include "volgap/gap_table.hpp"
#include "volgap/solver.hpp"
#include "volgap/special_fns.hpp"
#include "volgap/spectral.hpp"

static void BM_HeatTrace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(volgap::heat_trace(n, 0.1));
}
BENCHMARK(BM_HeatTrace)->Arg(2)->Arg(10)->Arg(50);

static void BM_ClyConstantLog(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(volgap::cly_constant_log(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClyConstantLog)->Arg(3)->Arg(200);

static void BM_GammaN(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(volgap::gamma_n(n));
}
BENCHMARK(BM_GammaN)->Arg(2)->Arg(30)->Arg(200);

static void BM_GapExcess(benchmark::State& state) {
    const volgap::GapParams p(static_cast<int>(state.range(0)), 5, 1.43);
    for (auto _ : state) benchmark::DoNotOptimize(volgap::gap_excess(p, volgap::GapVariant::Thm2Case1));
}
BENCHMARK(BM_GapExcess)->Arg(2)->Arg(200);

static void BM_GapTable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(volgap::emit_gap_table({2, 30}, {1, 30}, 1.43, volgap::TableFormat::Csv));
    }
}
BENCHMARK(BM_GapTable)->Unit(benchmark::kMillisecond);

static void BM_ClaimSuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(volgap::run_claim_suite(volgap::SuiteConfig{}));
}
BENCHMARK(BM_ClaimSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
