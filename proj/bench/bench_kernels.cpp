// Parallel kernels against their serial references. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "cmm/circle/circle.hpp"
#include "cmm/seaweed/meander.hpp"
#include "cmm/series/qseries.hpp"

namespace {

cmm::series::QSeries operand(std::size_t order)
{
    static const cmm::series::QSeries g = cmm::series::expand_G(4000);
    const auto& c = g.coeffs();
    return cmm::series::QSeries(std::vector<mpz_class>(c.begin(), c.begin() + static_cast<long>(order) + 1));
}

void BM_series_mul(benchmark::State& state)
{
    const auto a = operand(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmm::series::series_mul(a, a));
    }
}

void BM_series_mul_serial(benchmark::State& state)
{
    const auto a = operand(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmm::series::series_mul_serial(a, a));
    }
}

void BM_verify_part2(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmm::seaweed::verify_part2(static_cast<int>(state.range(0))));
    }
}

void BM_verify_part2_serial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmm::seaweed::verify_part2_serial(static_cast<int>(state.range(0))));
    }
}

void BM_threshold_scan(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmm::circle::threshold_scan(2000, 2000 + state.range(0)));
    }
}

void BM_threshold_scan_serial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmm::circle::threshold_scan_serial(2000, 2000 + state.range(0)));
    }
}

} // namespace

BENCHMARK(BM_series_mul)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_mul_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_part2)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_part2_serial)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_threshold_scan)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_threshold_scan_serial)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
