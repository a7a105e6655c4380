#include <benchmark/benchmark.h>

#include <random>

#include "scatlab/delpezzo.hpp"
#include "scatlab/scattering.hpp"
#include "scatlab/series.hpp"

using namespace scatlab;

namespace {

TruncatedSeries sample(std::mt19937& rng, int K, int terms)
{
    std::uniform_int_distribution<int> kd(1, K), ad(-3, 3), cd(-5, 5);
    TruncatedSeries f = TruncatedSeries::monomial(K, 0, {0, 0});
    for (int i = 0; i < terms; ++i)
        f.add_term(kd(rng), {ad(rng), ad(rng)}, Rational(cd(rng)));
    return f;
}

void BM_SeriesMul(benchmark::State& state)
{
    std::mt19937 rng(1);
    int K = static_cast<int>(state.range(0));
    TruncatedSeries f = sample(rng, K, 20), g = sample(rng, K, 20);
    for (auto _ : state)
        benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMul)->Arg(6)->Arg(10)->Arg(14);

void BM_SeriesLogExp(benchmark::State& state)
{
    std::mt19937 rng(2);
    TruncatedSeries f = sample(rng, static_cast<int>(state.range(0)), 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(exp(log(f)));
}
BENCHMARK(BM_SeriesLogExp)->Arg(6)->Arg(10);

void BM_Complete(benchmark::State& state)
{
    int l = static_cast<int>(state.range(0)), K = static_cast<int>(state.range(1));
    ScatteringDiagram d = make_basic({{1, 0}, {0, 1}}, {l, l}, K);
    for (auto _ : state)
        benchmark::DoNotOptimize(complete(d));
}
BENCHMARK(BM_Complete)->Args({1, 8})->Args({2, 8})->Args({2, 10})->Args({3, 7})->Unit(benchmark::kMillisecond);

void BM_CountSweep(benchmark::State& state)
{
    const ToricModel& X = model(Surface::CP2);
    std::int64_t max_sum = state.range(0);
    for (auto _ : state) {
        Integer total = 0;
        for (std::int64_t n = 3; n <= max_sum; n += 3)
            for (std::int64_t q = 1; 2 * q < n; ++q)
                if (std::gcd(n - q, q) == 1)
                    total += count_N(X, n - q, q).N;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_CountSweep)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
