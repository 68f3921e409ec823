#include <benchmark/benchmark.h>

#include "latenergy/energy.hpp"
#include "latenergy/lattice.hpp"
#include "latenergy/quadrature.hpp"
#include "latenergy/spectrum.hpp"

using namespace latenergy;

static void BuildLattice(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_lattice({Family::TriSquare33_42, Boundary::KleinBottle, n, n}));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BuildLattice)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oN);

static void ClosedFormSpectrum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_spectrum({Family::Hexagonal, Boundary::Toroidal, n, n}));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(ClosedFormSpectrum)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNLogN);

// Dense eigensolve of a free triangular patch with n*n vertices.
static void NumericSpectrum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = build_lattice({Family::Triangular, Boundary::Free, n, n});
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_spectrum(g));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(g.vertex_count()));
}
BENCHMARK(NumericSpectrum)
    ->DenseRange(8, 40, 8)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNCubed);

static void MidpointMean(benchmark::State& state) {
    const auto id = IntegrandId::planar(static_cast<Family>(state.range(1)));
    const auto points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(midpoint_mean(id, points));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(MidpointMean)
    ->ArgsProduct({{256, 1024, 4096}, {0, 1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

static void DaySoCheck(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph t = build_lattice({Family::Hexagonal, Boundary::Toroidal, n, n});
    const Graph c = build_lattice({Family::Hexagonal, Boundary::Cylindrical, n, n});
    const auto shared = common_edges(t, c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_day_so(t, shared));
    }
}
BENCHMARK(DaySoCheck)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
