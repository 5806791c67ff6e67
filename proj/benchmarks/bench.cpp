#include <benchmark/benchmark.h>

#include "glz/verify.hpp"

namespace {

void BM_Classify(benchmark::State& state) {
    glz::EmbeddingQuery q;
    q.m = 1;
    q.n = 3;
    q.space = glz::SpaceDescriptor::parse("L(3,2;1/2,0)");
    for (auto _ : state) benchmark::DoNotOptimize(glz::classify(q));
}
BENCHMARK(BM_Classify);

void BM_HeadNormNumeric(benchmark::State& state) {
    glz::PsiParams p;
    p.lambda = glz::Rational(0);
    p.q = glz::ExtendedRational(2);
    p.alpha = glz::Rational(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(glz::psi_norm_numeric(p, 0.0, 0x1p-20, {}));
}
BENCHMARK(BM_HeadNormNumeric);

void BM_RearrangeNorm(benchmark::State& state) {
    std::mt19937_64 rng(glz::default_seed());
    const glz::StepFunction f = glz::random_step_function(rng);
    const glz::SpaceDescriptor x = glz::SpaceDescriptor::parse("L(2,2;1/2,0)");
    for (auto _ : state)
        benchmark::DoNotOptimize(glz::glz_norm_numeric(x, f, {}));
}
BENCHMARK(BM_RearrangeNorm);

void BM_SweepFull(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(glz::sweep_suite("full"));
}
BENCHMARK(BM_SweepFull);

}  // namespace

BENCHMARK_MAIN();
