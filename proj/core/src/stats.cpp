// SPDX-License-Identifier: Apache-2.0
#include "fpa/stats.hpp"

#include "fpa/summation.hpp"

#include <cmath>
#include <vector>

namespace fpa {
namespace stats {

namespace {

template <typename T>
double variance_naive_native(std::span<const double> xs) {
    T sum = T(0);
    T sum_sq = T(0);
    for (double x : xs) {
        sum = static_cast<T>(sum + x);
        sum_sq = static_cast<T>(sum_sq + static_cast<T>(x * x));
    }
    T n = static_cast<T>(static_cast<double>(xs.size()));
    T mean_sq = static_cast<T>(static_cast<T>(sum * sum) / n);
    return static_cast<T>(static_cast<T>(sum_sq - mean_sq) / static_cast<T>(xs.size() - 1));
}

double variance_naive_toy(std::span<const double> xs, const FormatSpec& fmt) {
    ToyFloat sum = ToyFloat::zero(fmt);
    ToyFloat sum_sq = ToyFloat::zero(fmt);
    for (double x : xs) {
        ToyFloat xv = toy_from_double(x, fmt);
        sum = toy_add(sum, xv).value;
        sum_sq = toy_add(sum_sq, toy_mul(xv, xv).value).value;
    }
    ToyFloat n = toy_from_double(static_cast<double>(xs.size()), fmt);
    ToyFloat n1 = toy_from_double(static_cast<double>(xs.size() - 1), fmt);
    ToyFloat mean_sq = toy_div(toy_mul(sum, sum).value, n).value;
    ToyFloat var = toy_div(toy_sub(sum_sq, mean_sq).value, n1).value;
    if (!var.is_finite()) return var.negative() ? -HUGE_VAL : HUGE_VAL;
    return to_nearest_double(var.to_rational());
}

template <typename T>
double variance_two_pass_native(std::span<const double> xs) {
    std::vector<T> data(xs.begin(), xs.end());
    T mean = summation::sum_kahan(std::span<const T>(data)) / T(static_cast<double>(data.size()));
    // Deviations are formed in double, then carried in T; the correction
    // term absorbs the quantization of the mean.
    T sum_sq = T(0), carry_sq = T(0);
    T sum_d = T(0), carry_d = T(0);
    auto kahan_add = [](T& sum, T& carry, T value) {
        T y = value - carry;
        T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    };
    for (double x : xs) {
        T d = static_cast<T>(x - static_cast<double>(mean));
        kahan_add(sum_d, carry_d, d);
        kahan_add(sum_sq, carry_sq, static_cast<T>(d * d));
    }
    T n = T(static_cast<double>(xs.size()));
    T correction = static_cast<T>(static_cast<T>(sum_d * sum_d) / n);
    T var = static_cast<T>(static_cast<T>(sum_sq - correction) / T(static_cast<double>(xs.size() - 1)));
    return var < T(0) ? 0.0 : static_cast<double>(var);
}

} // namespace

double variance_naive(std::span<const double> xs, const FormatSpec& fmt) {
    if (xs.size() < 2) throw usage_error("variance needs n >= 2");
    fmt.validate();
    if (fmt == FormatSpec::binary64()) return variance_naive_native<double>(xs);
    if (fmt == FormatSpec::binary32()) return variance_naive_native<float>(xs);
    return variance_naive_toy(xs, fmt);
}

double variance_two_pass(std::span<const double> xs, const FormatSpec& fmt) {
    if (xs.size() < 2) throw usage_error("variance needs n >= 2");
    fmt.validate();
    if (fmt == FormatSpec::binary64()) return variance_two_pass_native<double>(xs);
    if (fmt == FormatSpec::binary32()) return variance_two_pass_native<float>(xs);
    throw usage_error("two-pass variance supports binary32/binary64 only");
}

ExactRational exact_variance_sample(std::span<const double> xs) {
    if (xs.size() < 2) throw usage_error("variance needs n >= 2");
    ExactRational sum(0);
    for (double x : xs) sum += ExactRational::from_float(x);
    ExactRational n(static_cast<long>(xs.size()));
    ExactRational mean = sum / n;
    ExactRational acc(0);
    for (double x : xs) {
        ExactRational d = ExactRational::from_float(x) - mean;
        acc += d * d;
    }
    return acc / ExactRational(static_cast<long>(xs.size() - 1));
}

} // namespace stats
} // namespace fpa
