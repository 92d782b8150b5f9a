// SPDX-License-Identifier: Apache-2.0
#include "fpa/rng.hpp"
#include "fpa/summation.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<double> make_data(std::size_t n) {
    fpa::SplitMix64 rng(7);
    std::vector<double> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.next_double());
    return xs;
}

void BM_SumNaive(benchmark::State& state) {
    auto xs = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fpa::summation::sum_naive<double>(xs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumPairwise(benchmark::State& state) {
    auto xs = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fpa::summation::sum_pairwise<double>(xs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumKahan(benchmark::State& state) {
    auto xs = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fpa::summation::sum_kahan<double>(xs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumNeumaier(benchmark::State& state) {
    auto xs = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fpa::summation::sum_neumaier<double>(xs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

// The emulated accumulator is orders of magnitude slower; keep the sizes small.
void BM_SumEmulatedBinary16(benchmark::State& state) {
    auto xs = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            fpa::summation::sum_naive(std::span<const double>(xs), fpa::FormatSpec::binary16()));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_SumNaive)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SumPairwise)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SumKahan)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SumNeumaier)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SumEmulatedBinary16)->Arg(1 << 10)->Arg(1 << 14);

BENCHMARK_MAIN();
