// SPDX-License-Identifier: Apache-2.0
#include "fpa/formats.hpp"
#include "fpa/rng.hpp"
#include "fpa/roundtrip.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_RoundRational(benchmark::State& state) {
    fpa::FormatSpec fmt = fpa::FormatSpec::binary16();
    fpa::ExactRational q = fpa::parse_decimal("1234.56789");
    for (auto _ : state) {
        auto r = fpa::round_rational(q, fmt, fpa::RoundingMode::NearestEven);
        benchmark::DoNotOptimize(r.value.significand());
    }
}

void BM_ToyAddBinary16(benchmark::State& state) {
    fpa::FormatSpec fmt = fpa::FormatSpec::binary16();
    fpa::ToyFloat acc = fpa::toy_from_double(1000.0, fmt);
    fpa::ToyFloat one = fpa::toy_from_double(1.0, fmt);
    for (auto _ : state) {
        auto r = fpa::toy_add(acc, one);
        benchmark::DoNotOptimize(r.value.significand());
    }
}

void BM_ShortestDecimal(benchmark::State& state) {
    fpa::SplitMix64 rng(5);
    double x = rng.next_double();
    for (auto _ : state) benchmark::DoNotOptimize(fpa::shortest_roundtrip_decimal(x));
}

} // namespace

BENCHMARK(BM_RoundRational);
BENCHMARK(BM_ToyAddBinary16);
BENCHMARK(BM_ShortestDecimal);

BENCHMARK_MAIN();
