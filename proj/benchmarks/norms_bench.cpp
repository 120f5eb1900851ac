#include <benchmark/benchmark.h>

#include "mixwidth/norms.hpp"
#include "mixwidth/sampling.hpp"

using namespace mixwidth;

static void BM_MixedNorm(benchmark::State& state, const char* q1, const char* q2)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = sample_ball(BlockShape(n, n), Exponent::infinity(), Exponent::from_int(1), 1, 1).front();
    const MixedNormParams params{Exponent::parse(q1), Exponent::parse(q2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(mixed_norm(x, params));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK_CAPTURE(BM_MixedNorm, l12, "1", "2")->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK_CAPTURE(BM_MixedNorm, l32_3, "3/2", "3")->RangeMultiplier(4)->Range(16, 1024);

static void BM_SampleBall(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sample_ball(BlockShape(n, n), Exponent::parse("3/2"), Exponent::from_int(1), seed++, 1));
}
BENCHMARK(BM_SampleBall)->RangeMultiplier(4)->Range(16, 256);
