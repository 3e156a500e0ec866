#include <benchmark/benchmark.h>

#include "cli/verify_suite.hpp"
#include "pqappell/appell.hpp"
#include "pqappell/families.hpp"
#include "pqappell/series.hpp"

namespace {

pqa::ContextPtr bench_context() { return pqa::make_context(pqa::Rational(7, 5), pqa::Rational(3, 11)); }

void BM_CauchyProduct(benchmark::State& state) {
    const auto ctx = bench_context();
    const auto order = static_cast<std::size_t>(state.range(0));
    const pqa::Series a = pqa::small_exp(ctx, pqa::Rational(2, 3), order);
    const pqa::Series b = pqa::big_exp(ctx, pqa::Rational(-5, 4), order);
    for (auto _ : state) benchmark::DoNotOptimize(pqa::cauchy_product(a, b));
}
BENCHMARK(BM_CauchyProduct)->Arg(8)->Arg(16)->Arg(32);

void BM_Reciprocal(benchmark::State& state) {
    const auto ctx = bench_context();
    const pqa::Series a = pqa::small_exp(ctx, pqa::Rational(1), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pqa::reciprocal(a));
}
BENCHMARK(BM_Reciprocal)->Arg(8)->Arg(16)->Arg(32);

void BM_FamilyConstruction(benchmark::State& state) {
    const auto kind = pqa::kAllFamilies[state.range(0)];
    state.SetLabel(std::string(pqa::family_name(kind)));
    for (auto _ : state) {
        // fresh context each time so the memo tables are part of the cost
        const auto seq = pqa::family_sequence(kind, bench_context(), 16);
        benchmark::DoNotOptimize(pqa::components(seq, 16));
    }
}
BENCHMARK(BM_FamilyConstruction)->DenseRange(0, 3);

void BM_Convolve(benchmark::State& state) {
    const auto ctx = bench_context();
    const auto b = pqa::bernoulli_sequence(ctx, 16);
    const auto h = pqa::hermite_sequence(ctx, 16);
    for (auto _ : state) benchmark::DoNotOptimize(pqa::convolve(b, pqa::inverse(h)));
}
BENCHMARK(BM_Convolve);

void BM_VerifyContext(benchmark::State& state) {
    const pqa::cli::ContextSpec spec{pqa::Rational(7, 5), pqa::Rational(3, 11)};
    for (auto _ : state) benchmark::DoNotOptimize(pqa::cli::run_context_suite(spec, 8, 42));
}
BENCHMARK(BM_VerifyContext)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
