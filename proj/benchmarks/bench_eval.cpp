// SPDX-License-Identifier: Apache-2.0
#include "fpa/eft.hpp"
#include "fpa/interval.hpp"
#include "fpa/polynomial.hpp"
#include "fpa/rng.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_TwoSum(benchmark::State& state) {
    fpa::SplitMix64 rng(3);
    double a = rng.next_double(), b = rng.next_double() * 1e-9;
    for (auto _ : state) {
        auto dw = fpa::two_sum(a, b);
        benchmark::DoNotOptimize(dw.hi);
        benchmark::DoNotOptimize(dw.lo);
    }
}

void BM_TwoProd(benchmark::State& state) {
    fpa::SplitMix64 rng(3);
    double a = 1.0 + rng.next_double(), b = 1.0 + rng.next_double();
    for (auto _ : state) {
        auto dw = fpa::two_prod(a, b);
        benchmark::DoNotOptimize(dw.hi);
        benchmark::DoNotOptimize(dw.lo);
    }
}

fpa::polynomial::Polynomial random_poly(int degree) {
    fpa::SplitMix64 rng(11);
    std::vector<double> coeffs;
    for (int i = 0; i <= degree; ++i) coeffs.push_back(rng.next_double() - 0.5);
    return fpa::polynomial::Polynomial(coeffs);
}

void BM_Horner(benchmark::State& state) {
    auto p = random_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fpa::polynomial::eval_horner(p, 1.000123));
}

void BM_HornerFma(benchmark::State& state) {
    auto p = random_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fpa::polynomial::eval_horner_fma(p, 1.000123));
}

void BM_HornerCompensated(benchmark::State& state) {
    auto p = random_poly(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fpa::polynomial::eval_horner_compensated(p, 1.000123));
}

void BM_IntervalMul(benchmark::State& state) {
    fpa::interval::Interval a = fpa::interval::make_interval(1.1, 1.2);
    fpa::interval::Interval b = fpa::interval::make_interval(-0.4, 2.7);
    for (auto _ : state) {
        auto r = fpa::interval::iv_mul(a, b);
        benchmark::DoNotOptimize(r.lo);
        benchmark::DoNotOptimize(r.hi);
    }
}

} // namespace

BENCHMARK(BM_TwoSum);
BENCHMARK(BM_TwoProd);
BENCHMARK(BM_Horner)->Arg(8)->Arg(64);
BENCHMARK(BM_HornerFma)->Arg(8)->Arg(64);
BENCHMARK(BM_HornerCompensated)->Arg(8)->Arg(64);
BENCHMARK(BM_IntervalMul);

BENCHMARK_MAIN();
