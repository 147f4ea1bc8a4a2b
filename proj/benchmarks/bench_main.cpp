#include "semilinear/coloring.hpp"
#include "semilinear/construct.hpp"
#include "semilinear/normalize.hpp"
#include "semilinear/oracle.hpp"
#include "semilinear/ramsey.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace semilinear;

namespace {

QuasiCompGraph random_quasicomp(std::size_t t, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, static_cast<long>(n));
    QuasiCompGraph q{t, {}};
    for (std::size_t v = 0; v < n; ++v) {
        QuasiCompVertex qv;
        for (std::size_t i = 0; i < t; ++i) {
            qv.x.push_back(Rational(coord(rng)));
            qv.y.push_back(Rational(coord(rng)));
        }
        qv.original_index = v;
        q.vertices.push_back(std::move(qv));
    }
    return q;
}

void BM_ColorShift(benchmark::State& state) {
    const auto g = shift_graph(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(color_semilinear(g, 3));
    state.counters["vertices"] = static_cast<double>(g.size());
}
BENCHMARK(BM_ColorShift)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ToDnf(benchmark::State& state) {
    const auto g = frankl_wilson(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(to_dnf(g));
}
BENCHMARK(BM_ToDnf)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FindCograph(benchmark::State& state) {
    const auto q = random_quasicomp(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(find_cograph(q));
}
BENCHMARK(BM_FindCograph)->Args({1, 200})->Args({2, 200})->Args({3, 200})->Unit(benchmark::kMillisecond);

void BM_ExactChromaticShift(benchmark::State& state) {
    const auto g = materialize(shift_graph(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(exact_chromatic(g, OracleBudget::vertices(g.size())));
}
BENCHMARK(BM_ExactChromaticShift)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Girth(benchmark::State& state) {
    const auto g = bipartite_graph(bcstt_construction(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_Girth)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_GirthConstruction(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_girth_construction(64, 2, ConstantSchedule::relaxed(), seed++));
    }
}
BENCHMARK(BM_GirthConstruction)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
