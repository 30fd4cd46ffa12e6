#include <benchmark/benchmark.h>

#include "psilab/operator_lab.hpp"

using namespace psilab;

namespace {

// Arg: 1/h.
double spacing(const benchmark::State& state) {
    return 1.0 / static_cast<double>(state.range(0));
}

void BM_ExpEigenResidual(benchmark::State& state) {
    const Grid grid = Grid::covering(spacing(state), 40.0);
    for (auto _ : state) benchmark::DoNotOptimize(exp_eigen_residual(Complex(1.0, 2.0), grid));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.count()));
}
BENCHMARK(BM_ExpEigenResidual)->Arg(50)->Arg(100)->Arg(400);

void BM_ShiftIsometry(benchmark::State& state) {
    const Grid grid = Grid::covering(spacing(state), 40.0);
    for (auto _ : state) benchmark::DoNotOptimize(shift_isometry_check(grid, 10));
}
BENCHMARK(BM_ShiftIsometry)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DilationResidual(benchmark::State& state) {
    const double h = spacing(state);
    const Grid grid = Grid::covering(h, 20.0, 1.0 - 3.0 * h);
    for (auto _ : state) benchmark::DoNotOptimize(dilation_generator_residual(Complex(0.75, 5.0), grid, EigenSign::PositiveI));
}
BENCHMARK(BM_DilationResidual)->Arg(50)->Arg(200);

void BM_IntertwineCheck(benchmark::State& state) {
    const Grid grid = Grid::covering(spacing(state), 20.0);
    for (auto _ : state) benchmark::DoNotOptimize(intertwine_check(Complex(0.75, 5.0), grid));
}
BENCHMARK(BM_IntertwineCheck)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
