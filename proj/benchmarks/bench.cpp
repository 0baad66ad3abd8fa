#include <hyperturan/constructions.hpp>
#include <hyperturan/detectors.hpp>
#include <hyperturan/search.hpp>

#include <benchmark/benchmark.h>

using namespace hyperturan;

static void BM_ExpansionCliquePositive(benchmark::State & state)
{
    const auto h = complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_expansion_clique(h, 3));
}
BENCHMARK(BM_ExpansionCliquePositive)->Arg(7)->Arg(10)->Arg(13);

// exhaustive negative answer on the Turan graph
static void BM_ExpansionCliqueNegative(benchmark::State & state)
{
    const auto h = complete_multipartite(static_cast<std::size_t>(state.range(0)), 3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_expansion_clique(h, 4));
}
BENCHMARK(BM_ExpansionCliqueNegative)->Arg(9)->Arg(12);

static void BM_MatchingNumber(benchmark::State & state)
{
    const auto h = generate_construction(ConstructionKind::g3, {state.range(0), 3, std::nullopt, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(matching_number(h));
}
BENCHMARK(BM_MatchingNumber)->Arg(10)->Arg(13);

static void BM_RainbowDetector(benchmark::State & state)
{
    const auto layers = generate_rainbow_layers(RainbowKind::complete_plus_empty, 9, 3, 3, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_rainbow_expansion_clique(layers, 3));
}
BENCHMARK(BM_RainbowDetector);

static void BM_OracleTriangle(benchmark::State & state)
{
    const ForbiddenSpec spec({ForbiddenSpec::expansion_clique(3)});
    for (auto _ : state)
        benchmark::DoNotOptimize(max_edges_avoiding(static_cast<std::size_t>(state.range(0)), 3, spec).value);
}
BENCHMARK(BM_OracleTriangle)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_OracleMatching(benchmark::State & state)
{
    const ForbiddenSpec spec({ForbiddenSpec::matching(3)});
    for (auto _ : state)
        benchmark::DoNotOptimize(max_edges_avoiding(static_cast<std::size_t>(state.range(0)), 3, spec).value);
}
BENCHMARK(BM_OracleMatching)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_RainbowOracle(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rainbow_max_sum(6, 3, 3, 3).value);
}
BENCHMARK(BM_RainbowOracle)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
