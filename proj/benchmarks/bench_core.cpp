#include <benchmark/benchmark.h>

#include "gint/expr.hpp"
#include "gint/gadgets.hpp"
#include "gint/lucas.hpp"
#include "gint/poly.hpp"
#include "gint/reduction.hpp"

using namespace gint;

static void BM_LucasPairDoubling(benchmark::State& state) {
    const LucasParams p{Int(4), Int(1)};
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lucas_pair(p, n));
}
BENCHMARK(BM_LucasPairDoubling)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_LucasPairIterative(benchmark::State& state) {
    const LucasParams p{Int(4), Int(1)};
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lucas_pair_iterative(p, n));
}
BENCHMARK(BM_LucasPairIterative)->Arg(1000)->Arg(10000);

static void BM_MakeWitness(benchmark::State& state) {
    const Int z(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_integrality_witness(z));
}
BENCHMARK(BM_MakeWitness)->Arg(0)->Arg(5)->Arg(20);

static void BM_EvalFOnWitness(benchmark::State& state) {
    const IntegralityWitness w = make_integrality_witness(Int(state.range(0)));
    const GaussianInt v(w.v), ww(w.w), x(w.x), y(w.y), z(w.z);
    for (auto _ : state) benchmark::DoNotOptimize(eval_F(v, ww, x, y, z));
}
BENCHMARK(BM_EvalFOnWitness)->Arg(5)->Arg(20);

static void BM_ParseFTemplate(benchmark::State& state) {
    const std::string text = render(build_F_template());
    for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_ParseFTemplate);

static void BM_ExpandFTemplate(benchmark::State& state) {
    const Expr F = build_F_template();
    for (auto _ : state) benchmark::DoNotOptimize(expand(F, 1000000));
}
BENCHMARK(BM_ExpandFTemplate);

static void BM_Reduce(benchmark::State& state) {
    const Expr f = parse("z1 - z10");
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_gaussian(f));
}
BENCHMARK(BM_Reduce);

static void BM_PellEnumerate(benchmark::State& state) {
    const Int bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_pell(Int(4), bound));
}
BENCHMARK(BM_PellEnumerate)->Arg(1000)->Arg(10000);

static void BM_GaussianBoxScan(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_pell_box_scan(bound));
}
BENCHMARK(BM_GaussianBoxScan)->Arg(16)->Arg(60);

BENCHMARK_MAIN();
