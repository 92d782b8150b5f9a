// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/formats.hpp"
#include "fpa/rational.hpp"

#include <cstddef>
#include <span>

namespace fpa {
namespace stats {

// Streaming first/second-moment accumulator (Welford). m2 cannot go
// negative, unlike the textbook sum-of-squares formula.
template <typename T>
struct OnlineStats {
    std::size_t n = 0;
    T mean = T(0);
    T m2 = T(0);
};

template <typename T>
OnlineStats<T> welford_update(OnlineStats<T> acc, T x) {
    acc.n += 1;
    T delta = x - acc.mean;
    acc.mean = acc.mean + delta / T(static_cast<double>(acc.n));
    acc.m2 = acc.m2 + delta * (x - acc.mean);
    return acc;
}

template <typename T>
OnlineStats<T> welford_accumulate(std::span<const T> xs) {
    OnlineStats<T> acc;
    for (const T& x : xs) acc = welford_update(acc, x);
    return acc;
}

template <typename T>
T variance_sample(const OnlineStats<T>& acc) {
    if (acc.n < 2) throw usage_error("sample variance needs n >= 2");
    return acc.m2 / T(static_cast<double>(acc.n - 1));
}

template <typename T>
T variance_population(const OnlineStats<T>& acc) {
    if (acc.n < 1) throw usage_error("population variance needs n >= 1");
    return acc.m2 / T(static_cast<double>(acc.n));
}

// Pooled combination of two accumulators (parallel chunks).
template <typename T>
OnlineStats<T> welford_merge(const OnlineStats<T>& a, const OnlineStats<T>& b) {
    if (a.n == 0) return b;
    if (b.n == 0) return a;
    OnlineStats<T> out;
    out.n = a.n + b.n;
    T na = T(static_cast<double>(a.n));
    T nb = T(static_cast<double>(b.n));
    T nt = T(static_cast<double>(out.n));
    T delta = b.mean - a.mean;
    out.mean = a.mean + delta * (nb / nt);
    out.m2 = a.m2 + b.m2 + delta * delta * (na * (nb / nt));
    return out;
}

// Pairwise covariance via the same update pattern.
template <typename T>
struct OnlineCovariance {
    std::size_t n = 0;
    T mean_x = T(0);
    T mean_y = T(0);
    T c2 = T(0);
};

template <typename T>
OnlineCovariance<T> covariance_update(OnlineCovariance<T> acc, T x, T y) {
    acc.n += 1;
    T inv_n = T(1.0) / T(static_cast<double>(acc.n));
    T dx = x - acc.mean_x;
    acc.mean_x = acc.mean_x + dx * inv_n;
    acc.mean_y = acc.mean_y + (y - acc.mean_y) * inv_n;
    acc.c2 = acc.c2 + dx * (y - acc.mean_y);
    return acc;
}

template <typename T>
T covariance_sample(const OnlineCovariance<T>& acc) {
    if (acc.n < 2) throw usage_error("sample covariance needs n >= 2");
    return acc.c2 / T(static_cast<double>(acc.n - 1));
}

// (sum x^2 - (sum x)^2 / n) / (n-1) with every intermediate rounded in
// `fmt`; inputs participate at their given precision. May come out
// negative: that is the hazard on display.
double variance_naive(std::span<const double> xs, const FormatSpec& fmt);

// Corrected two-pass estimator: mean first, then compensated sums of the
// deviations and of their squares. Clamped at zero.
double variance_two_pass(std::span<const double> xs, const FormatSpec& fmt);

// Ground truth.
ExactRational exact_variance_sample(std::span<const double> xs);

} // namespace stats
} // namespace fpa
