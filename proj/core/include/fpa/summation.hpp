// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/formats.hpp"
#include "fpa/rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fpa {
namespace summation {

// Left-to-right fold, the Monte-Carlo-accumulator baseline.
template <typename T>
T sum_naive(std::span<const T> xs) {
    T acc = T(0);
    for (const T& x : xs) acc = acc + x;
    return acc;
}

// Naive fold with every partial sum rounded into `accumulator_fmt`.
// binary32/binary64 dispatch to hardware; anything else (binary16, toy
// decimal formats) runs on the simulator. Returns the final accumulator
// widened to double.
double sum_naive(std::span<const double> xs, const FormatSpec& accumulator_fmt);

// Ascending-magnitude sort then naive fold. A valid accuracy strategy only
// for same-sign contributions.
template <typename T>
T sum_sorted(std::span<const T> xs) {
    using std::fabs;
    std::vector<T> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const T& a, const T& b) { return fabs(a) < fabs(b); });
    return sum_naive(std::span<const T>(sorted));
}

// Recursive halving; blocks of at most base_block are folded naively.
template <typename T>
T sum_pairwise(std::span<const T> xs, std::size_t base_block = 32) {
    if (base_block < 1) base_block = 1;
    if (xs.size() <= base_block) return sum_naive(xs);
    std::size_t half = xs.size() / 2;
    return sum_pairwise(xs.first(half), base_block) + sum_pairwise(xs.subspan(half), base_block);
}

template <typename T>
T sum_kahan(std::span<const T> xs) {
    T sum = T(0);
    T carry = T(0);
    for (const T& x : xs) {
        T y = x - carry;
        T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// Neumaier's variant: the operands of each compensation are ordered by
// magnitude and the carry joins once at the end, so it survives a large
// intermediate swamping the running sum.
template <typename T>
T sum_neumaier(std::span<const T> xs) {
    using std::fabs;
    T sum = T(0);
    T carry = T(0);
    for (const T& x : xs) {
        T t = sum + x;
        if (fabs(sum) >= fabs(x))
            carry = carry + ((sum - t) + x);
        else
            carry = carry + ((x - t) + sum);
        sum = t;
    }
    return sum + carry;
}

// binary16 contributions accumulated in a binary32 register; the widening
// is exact, only the accumulation rounds.
float sum_mixed(std::span<const double> binary16_values);

enum class Method { Naive, Sorted, Pairwise, Kahan, Neumaier, Mixed };
const char* to_string(Method method);
Method method_from_name(const std::string& name); // usage_error on unknown names

// Random-walk error model: eps*sqrt(n) for a naive fold,
// eps*sqrt(log2 n) for pairwise, 2*eps for compensated sums. An
// order-of-magnitude guide under the comparable-size-terms assumption, not
// a bound.
ExactRational predicted_relative_error(std::size_t n, const ExactRational& epsilon, Method method);
double predicted_relative_error(std::size_t n, double epsilon, Method method);

// Compensated partial sum of an alternating series plus the classical
// truncation bound |t_{n+1}|. The sign/decrease preconditions are the
// caller's contract.
struct LeibnizResult {
    double sum;
    double bound;
};
LeibnizResult leibniz_partial_sum(const std::function<double(std::size_t)>& term, std::size_t n);

struct SumReport {
    std::string method;
    double result = 0;
    ExactRational exact;
    ExactRational relative_error; // |result - exact| / |exact|
    ExactRational error_ulps;     // in ulps of `fmt` at the exact value
};

SumReport make_report(Method method, double result, const ExactRational& exact,
                      const FormatSpec& fmt);

// Exact value of a float sequence's sum.
template <typename T>
ExactRational exact_sum(std::span<const T> xs) {
    ExactRational total(0);
    for (const T& x : xs) total += ExactRational::from_float(x);
    return total;
}

} // namespace summation
} // namespace fpa
