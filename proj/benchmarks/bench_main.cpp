#include <benchmark/benchmark.h>

#include "simplexcodes/examples.hpp"
#include "simplexcodes/oracle.hpp"
#include "simplexcodes/tverberg.hpp"

using namespace simplexcodes;

namespace {

void BM_EnumerateSimplex(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_simplex(q, n));
}
BENCHMARK(BM_EnumerateSimplex)->Args({6, 6})->Args({4, 12})->Args({12, 4});

void BM_Multinomial(benchmark::State& state) {
    const auto points = enumerate_simplex(4, 16);
    for (auto _ : state)
        for (const SimplexPoint& p : points) benchmark::DoNotOptimize(multinomial(16, p));
}
BENCHMARK(BM_Multinomial);

void BM_RadicalSumAccumulate(benchmark::State& state) {
    for (auto _ : state) {
        RadicalSum sum;
        for (int num = 1; num <= 60; ++num)
            sum.add(SqrtRational(num % 2 ? 1 : -1, make_rational(num, num + 1)));
        benchmark::DoNotOptimize(sum.is_zero());
    }
}
BENCHMARK(BM_RadicalSumAccumulate);

void BM_CheckKLExactN7(benchmark::State& state) {
    const SimplexCode code = construction_gmde(2, 1, 2, -1);
    for (auto _ : state) benchmark::DoNotOptimize(check_kl(code, 2, KLMode::Exact));
}
BENCHMARK(BM_CheckKLExactN7);

void BM_CheckKLExactPIN6(benchmark::State& state) {
    const SimplexCode code = load_fixture("pi-n6");
    for (auto _ : state) benchmark::DoNotOptimize(check_kl(code, 2, KLMode::Exact));
}
BENCHMARK(BM_CheckKLExactPIN6);

void BM_WitnessPipelinePIN6(benchmark::State& state) {
    const L1Code seed = scaled_simplex_code(2, 2);
    for (auto _ : state) {
        const PointCloud cloud = kl_point_cloud(seed, 2);
        benchmark::DoNotOptimize(find_witness(cloud, 2, WitnessStrategy::Orbit));
    }
}
BENCHMARK(BM_WitnessPipelinePIN6);

void BM_DickeExpand(benchmark::State& state) {
    const SimplexPoint n{3, 2, 2};
    for (auto _ : state) benchmark::DoNotOptimize(dicke_expand(n));
}
BENCHMARK(BM_DickeExpand);

void BM_AdGramN7(benchmark::State& state) {
    const SimplexCode code = load_fixture("n7-fock");
    for (auto _ : state) benchmark::DoNotOptimize(build_ad_gram_table(code, 2, 0.1));
}
BENCHMARK(BM_AdGramN7);

}  // namespace

BENCHMARK_MAIN();
