#include "penrose/graph.hpp"
#include "penrose/kite.hpp"

#include <benchmark/benchmark.h>

using namespace penrose;

static void BM_Sign(benchmark::State& state) {
    GoldenReal x(123456789L, -76303861L);
    for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_Sign);

static void BM_ReturnMap(benchmark::State& state) {
    RatPoint p(GoldenRat(BigInt(7), BigInt(0), BigInt(3)), GoldenRat(1));
    for (auto _ : state) {
        RatPoint q = returnMap(p);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_ReturnMap);

static void BM_Pinwheel(benchmark::State& state) {
    RatPoint p(GoldenRat(BigInt(7), BigInt(0), BigInt(3)), GoldenRat(1));
    for (auto _ : state) {
        RatPoint q = pinwheel(p);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_Pinwheel);

static void BM_Classify(benchmark::State& state) {
    auto part = loadPartition();
    long x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(part, 5 + (x % 40), 7 + (x % 23)));
        ++x;
    }
}
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
