#include <benchmark/benchmark.h>

#include "qcrystal/recurrences.hpp"
#include "qcrystal/series.hpp"

using namespace qcrystal;

namespace {

QSeries dense_unit(int trunc) {
    QSeries s = QSeries::one(trunc);
    for (int k = 1; k < trunc; ++k) s.set_coeff(k, (k % 7) - 3);
    return s;
}

void BM_series_multiply(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    QSeries a = dense_unit(trunc);
    QSeries b = dense_unit(trunc);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_multiply)->Arg(64)->Arg(256)->Arg(1024);

void BM_series_inverse(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    QSeries a = dense_unit(trunc);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_series_inverse)->Arg(64)->Arg(256)->Arg(1024);

void BM_pochhammer_inverse(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(poch(1, 1, -1, trunc).inverse());
}
BENCHMARK(BM_pochhammer_inverse)->Arg(100)->Arg(400);

void BM_theorem_sum(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theorem_sum('b', 1, trunc));
}
BENCHMARK(BM_theorem_sum)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
