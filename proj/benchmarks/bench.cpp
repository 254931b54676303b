#include "rigidity/engine.hpp"
#include "rigidity/prime_pool.hpp"

#include <benchmark/benchmark.h>

using namespace rigidity;

namespace {

FpMatrix random_square(int n, std::uint64_t p, SplitRng& rng) {
    FpMatrix m(n, n, p);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, rng.uniform(0, p - 1));
    return m;
}

void BM_RankModP(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitRng rng(1);
    FpMatrix m = random_square(n, 1000003, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m));
    state.SetComplexityN(n);
}
BENCHMARK(BM_RankModP)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity(benchmark::oNCubed);

void BM_CheckGlobalK55(benchmark::State& state) {
    Graph k55 = generate(Family::complete_bipartite, {5, 5});
    TestConfig cfg;
    cfg.dim = 3;
    cfg.rounds = static_cast<int>(state.range(0));
    cfg.seed = 9;
    for (auto _ : state) benchmark::DoNotOptimize(check_global(k55, 3, cfg));
}
BENCHMARK(BM_CheckGlobalK55)->Arg(1)->Arg(10)->Arg(40);

void BM_CheckGlobalModularVsRationalK4(benchmark::State& state) {
    Graph k4 = generate(Family::complete, {4});
    TestConfig cfg;
    cfg.dim = 2;
    cfg.rounds = 4;
    cfg.seed = 9;
    cfg.mode = state.range(0) == 0 ? Mode::modular : Mode::rational;
    for (auto _ : state) benchmark::DoNotOptimize(check_global(k4, 2, cfg));
}
BENCHMARK(BM_CheckGlobalModularVsRationalK4)->Arg(0)->Arg(1);

void BM_PrimePool(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_prime_pool(n, n));
}
BENCHMARK(BM_PrimePool)->Arg(96)->Arg(3360);

}  // namespace

BENCHMARK_MAIN();
