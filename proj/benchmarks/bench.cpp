#include <benchmark/benchmark.h>

#include <random>

#include "mixedtoric/j10.hpp"
#include "mixedtoric/parser.hpp"
#include "mixedtoric/resolution.hpp"

using namespace mixedtoric;

namespace {

MixedPolynomial deformed_cusp() {
    return parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2",
                 {});
}

void BM_classify_family(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(j10_classify_family());
}
BENCHMARK(BM_classify_family);

void BM_subdivide(benchmark::State& state) {
    Ray mid(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(subdivide({Ray::e1(), mid, Ray::e2()}));
}
BENCHMARK(BM_subdivide)->Args({1, 2})->Args({2, 5})->Args({89, 144});

void BM_residual(benchmark::State& state) {
    MixedPolynomial f = deformed_cusp();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.2, 2.0), a(-3.14, 3.14);
    TorusPoint p{{std::polar(u(rng), a(rng)), std::polar(u(rng), a(rng))}};
    for (auto _ : state)
        benchmark::DoNotOptimize(criticality_residual(f, p).residual);
}
BENCHMARK(BM_residual);

void BM_search_small(benchmark::State& state) {
    MixedPolynomial f = deformed_cusp();
    SearchConfig cfg;
    cfg.starts = static_cast<int>(state.range(0));
    cfg.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(search_critical(f, cfg));
}
BENCHMARK(BM_search_small)->Arg(50)->Arg(200);

void BM_pullback(benchmark::State& state) {
    MixedPolynomial f = deformed_cusp();
    ChartMap chart(Ray(1, 1), Ray(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(pullback(f, chart));
}
BENCHMARK(BM_pullback);

void BM_resolve(benchmark::State& state) {
    MixedPolynomial f = deformed_cusp();
    Fan2 fan = subdivide({Ray::e1(), Ray(1, 2), Ray::e2()});
    for (auto _ : state) benchmark::DoNotOptimize(resolve(f, fan));
}
BENCHMARK(BM_resolve);

}  // namespace

BENCHMARK_MAIN();
