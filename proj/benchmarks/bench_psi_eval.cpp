#include <benchmark/benchmark.h>

#include "psilab/norm_lab.hpp"
#include "psilab/psi_eval.hpp"

using namespace psilab;

namespace {

// Arg: Im z. Re z = 1.5 so that all three routes apply.
void BM_PsiSeries(benchmark::State& state) {
    const Complex z(1.5, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_series(z, 0.5, 1e-10));
}
BENCHMARK(BM_PsiSeries)->Arg(0)->Arg(10)->Arg(30);

void BM_PsiEulerMaclaurin(benchmark::State& state) {
    const Complex z(1.5, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_euler_maclaurin(z, 0.5));
}
BENCHMARK(BM_PsiEulerMaclaurin)->Arg(0)->Arg(10)->Arg(30);

void BM_PsiIntegral(benchmark::State& state) {
    const Complex z(1.5, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_integral(z, 0.5, 1e-12));
}
BENCHMARK(BM_PsiIntegral)->Arg(0)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ReferenceZeta(benchmark::State& state) {
    const Complex z(0.5, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference_zeta(z));
}
BENCHMARK(BM_ReferenceZeta)->Arg(14)->Arg(100);

void BM_ConvergenceClassify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(convergence_classify(Complex(0.5, 14.13), WeightExponent(-2.0)));
}
BENCHMARK(BM_ConvergenceClassify)->Unit(benchmark::kMicrosecond);

}  // namespace
