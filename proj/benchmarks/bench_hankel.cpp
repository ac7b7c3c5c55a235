#include <benchmark/benchmark.h>

#include "arcstar/hankel.hpp"
#include "arcstar/radius.hpp"

namespace {

using namespace arcstar;

void BM_SurrogateEval(benchmark::State& state) {
    double p = 0.0;
    for (auto _ : state) {
        p += 1e-9;
        const double v = surrogate_H({1.0 + p, 0.5, 0.5});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SurrogateEval);

void BM_H3Routes(benchmark::State& state) {
    const CaratheodoryPoint c{1.3, {0.4, 0.2}, {-0.3, 0.5}, {0.1, -0.7}};
    for (auto _ : state) {
        const auto v = h3_direct(p_from_params(c));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_H3Routes);

void BM_SurrogateGrid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto m = maximize_surrogate(n, 10);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_SurrogateGrid)->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_FunctionalSearch(benchmark::State& state) {
    for (auto _ : state) {
        const auto r = maximize_functional(Target::h3, 10, 0);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FunctionalSearch)->Unit(benchmark::kMillisecond);

void BM_RadiusCatalog(benchmark::State& state) {
    for (auto _ : state) {
        const auto v = radius_catalog();
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RadiusCatalog)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
