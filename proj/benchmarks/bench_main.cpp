#include <incolor/colorers.hpp>
#include <incolor/generate.hpp>
#include <incolor/latin.hpp>
#include <incolor/oracle.hpp>
#include <incolor/outerplanar.hpp>
#include <incolor/verify.hpp>

#include <benchmark/benchmark.h>

using namespace incolor;

namespace {

void BM_ColorTree(benchmark::State& state)
{
    const Graph g = make_random_tree(static_cast<Vertex>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(color_tree(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColorTree)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_VerifyTree(benchmark::State& state)
{
    const Graph g = make_random_tree(static_cast<Vertex>(state.range(0)), 42);
    const auto r = color_tree(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_defective(g, r.coloring, 1));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifyTree)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_LatinNoPrincipal(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(latin_square_no_principal(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_LatinNoPrincipal)->Arg(96)->Arg(384)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_ColorComplete(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(color_complete(static_cast<Vertex>(state.range(0)), 1));
    }
}
BENCHMARK(BM_ColorComplete)->Arg(65)->Arg(257)->Unit(benchmark::kMillisecond);

void BM_Inspection(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(reducibility_inspection(1));
    }
}
BENCHMARK(BM_Inspection)->Unit(benchmark::kMillisecond);

void BM_ConditionalOuterplanar(benchmark::State& state)
{
    const Graph g = trim_max_degree(make_random_maximal_outerplanar(static_cast<Vertex>(state.range(0)), 7), 6, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(conditional_color(g, 6));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConditionalOuterplanar)->RangeMultiplier(4)->Range(64, 4096)->Complexity()->Unit(benchmark::kMillisecond);

void BM_OracleK4(benchmark::State& state)
{
    const Graph g = make_complete(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_coloring_exhaustive(g, 1, 3));
    }
}
BENCHMARK(BM_OracleK4);

} // namespace

BENCHMARK_MAIN();
