#include <benchmark/benchmark.h>

#include <complex>

#include "arcstar/extremal.hpp"
#include "arcstar/power_series.hpp"

namespace {

using arcstar::PowerSeries;

void BM_SeriesMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PowerSeries a = PowerSeries::arctan(n);
    const PowerSeries b = exp(integrate_over_t(a));
    for (auto _ : state) {
        PowerSeries c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(48)->Arg(128)->Arg(320);

void BM_SeriesExp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PowerSeries f = integrate_over_t(PowerSeries::arctan(n));
    for (auto _ : state) {
        PowerSeries e = exp(f);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_SeriesExp)->Arg(48)->Arg(128)->Arg(320);

void BM_SeriesCompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PowerSeries f = PowerSeries::arctan(n);
    const PowerSeries g = PowerSeries::monomial(n, 3);
    for (auto _ : state) {
        PowerSeries c = compose(f, g);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesCompose)->Arg(48)->Arg(128);

void BM_SeriesEval(benchmark::State& state) {
    const PowerSeries e = exp(integrate_over_t(PowerSeries::arctan(48)));
    const std::complex<double> z = std::polar(0.9, 1.0);
    for (auto _ : state) {
        auto v = e.eval(z);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SeriesEval);

void BM_BuildExtremal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto f = arcstar::build_f_n(2, n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_BuildExtremal)->Arg(48)->Arg(128);

void BM_GrowthBounds(benchmark::State& state) {
    for (auto _ : state) {
        auto b = arcstar::growth_bounds(0.9);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_GrowthBounds);

}  // namespace

BENCHMARK_MAIN();
