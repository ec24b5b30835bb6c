#include <benchmark/benchmark.h>

#include "qcrystal/crystal.hpp"
#include "qcrystal/paths.hpp"

using namespace qcrystal;

namespace {

void BM_enumerate_paths(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    const PerfectCrystalSpec& spec = b13();
    GroundState gs = ground_state(spec, {3, 0});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths(spec, gs, trunc));
}
BENCHMARK(BM_enumerate_paths)->Arg(10)->Arg(14)->Arg(18);

void BM_path_series_bundle(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    int threads = static_cast<int>(state.range(1));
    const PerfectCrystalSpec& spec = b13();
    GroundState gs = ground_state(spec, {3, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(path_series_bundle(spec, gs, trunc, threads));
}
BENCHMARK(BM_path_series_bundle)->Args({16, 1})->Args({16, 4})->Args({22, 4});

void BM_bfs_levels(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    const PerfectCrystalSpec& spec = b13();
    GroundState gs = ground_state(spec, {3, 0});
    for (auto _ : state) benchmark::DoNotOptimize(bfs_levels(spec, gs, depth));
}
BENCHMARK(BM_bfs_levels)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
