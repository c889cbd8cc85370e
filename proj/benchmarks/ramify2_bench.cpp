#include <benchmark/benchmark.h>

#include "ramify2/composita.hpp"
#include "ramify2/pipeline.hpp"
#include "ramify2/slope_content.hpp"

using namespace ramify2;

namespace {

const group_catalog& catalog() {
    static const group_catalog cat =
        group_catalog::load_file(RAMIFY2_BENCH_CATALOG);
    return cat;
}

void BM_parse_content(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            slope_content::parse("[2,3,7/2,4,17/4,5]_1^2"));
    }
}
BENCHMARK(BM_parse_content);

void BM_gms(benchmark::State& state) {
    slope_content c = slope_content::parse("[2,3,7/2,4,17/4,5]_1");
    for (auto _ : state) benchmark::DoNotOptimize(c.gms());
}
BENCHMARK(BM_gms);

void BM_crude_compose(benchmark::State& state) {
    slope_content a = slope_content::parse("[2,3,7/2]_9");
    slope_content b = slope_content::parse("[2,3,4]_15");
    for (auto _ : state) benchmark::DoNotOptimize(crude_compose(a, b));
}
BENCHMARK(BM_crude_compose);

void BM_capped_compose(benchmark::State& state) {
    slope_content a = slope_content::parse("[2,3,7/2]_9");
    slope_content b = slope_content::parse("[2,3,4]_15");
    for (auto _ : state) benchmark::DoNotOptimize(cap_wild_count(a, b, 4));
}
BENCHMARK(BM_capped_compose);

void BM_caps_curated(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gms_caps_for_degree(degree, caps_mode::paper));
}
BENCHMARK(BM_caps_curated)->Arg(9)->Arg(12);

void BM_caps_exhaustive(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gms_caps_for_degree(degree, caps_mode::exhaustive));
}
BENCHMARK(BM_caps_exhaustive)->Arg(9)->Arg(12);

void BM_eliminate(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    const group_catalog& cat = catalog();
    for (auto _ : state) benchmark::DoNotOptimize(eliminate(degree, cat));
}
BENCHMARK(BM_eliminate)->Arg(9)->Arg(12)->Arg(15);

void BM_report(benchmark::State& state) {
    const group_catalog& cat = catalog();
    for (auto _ : state) benchmark::DoNotOptimize(report(cat));
}
BENCHMARK(BM_report);

}  // namespace

BENCHMARK_MAIN();
