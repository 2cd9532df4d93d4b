#include <benchmark/benchmark.h>

#include <qbarnes/barnes.hpp>
#include <qbarnes/characters.hpp>
#include <qbarnes/padic.hpp>
#include <qbarnes/qbern.hpp>

using namespace qbarnes;

static void BM_Beta(benchmark::State& state) {
    const BetaParams p{static_cast<unsigned>(state.range(0)), 3, {1, 2}, BigRat(1L), 1};
    for (auto _ : state) benchmark::DoNotOptimize(beta(p));
}
BENCHMARK(BM_Beta)->Arg(2)->Arg(4)->Arg(6);

static void BM_Theorem2Rhs(benchmark::State& state) {
    const BetaParams p{2, 3, {1, 2}, BigRat(1L), 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem2_rhs(p, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_Theorem2Rhs)->Arg(2)->Arg(3);

static void BM_RatFunAdd(benchmark::State& state) {
    const RatFun a = beta(BetaParams{3, 3, {1, 2}, BigRat(0L), 1});
    const RatFun b = beta(BetaParams{3, 3, {2, 1}, BigRat(1L), 1});
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RatFunAdd);

static void BM_BarnesPoly(benchmark::State& state) {
    const BarnesParams p{static_cast<unsigned>(state.range(0)),
                         {BigRat(1L), BigRat(2L), BigRat(1, 2)}, BigRat(1L)};
    for (auto _ : state) benchmark::DoNotOptimize(barnes_poly(p));
}
BENCHMARK(BM_BarnesPoly)->Arg(8)->Arg(16);

static void BM_RiemannSum(benchmark::State& state) {
    const OracleJob job{3, mpz_class(4), 1, static_cast<unsigned>(state.range(0)),
                        BetaParams{1, 2, {1, 1}, BigRat(0L), 1}, {}};
    for (auto _ : state) benchmark::DoNotOptimize(riemann_sum(job));
}
BENCHMARK(BM_RiemannSum)->Arg(2)->Arg(3);

static void BM_EnumerateCharacters(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_characters(static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_EnumerateCharacters)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
