// SPDX-License-Identifier: Apache-2.0
#include "fpa/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fpa {
namespace summation {

double sum_naive(std::span<const double> xs, const FormatSpec& accumulator_fmt) {
    accumulator_fmt.validate();
    if (accumulator_fmt == FormatSpec::binary64()) return sum_naive<double>(xs);
    if (accumulator_fmt == FormatSpec::binary32()) {
        float acc = 0.0f;
        for (double x : xs) acc = static_cast<float>(acc + x);
        return acc;
    }
    ToyFloat acc = ToyFloat::zero(accumulator_fmt);
    for (double x : xs) {
        ToyFloat xv = toy_from_double(x, accumulator_fmt);
        acc = toy_add(acc, xv).value;
        if (acc.is_inf()) break;
    }
    if (acc.is_inf())
        return acc.negative() ? -std::numeric_limits<double>::infinity()
                              : std::numeric_limits<double>::infinity();
    return to_nearest_double(acc.to_rational());
}

float sum_mixed(std::span<const double> binary16_values) {
    float acc = 0.0f;
    for (double x : binary16_values) acc += static_cast<float>(x);
    return acc;
}

const char* to_string(Method method) {
    switch (method) {
    case Method::Naive: return "naive";
    case Method::Sorted: return "sorted";
    case Method::Pairwise: return "pairwise";
    case Method::Kahan: return "kahan";
    case Method::Neumaier: return "neumaier";
    case Method::Mixed: return "mixed";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "naive") return Method::Naive;
    if (name == "sorted") return Method::Sorted;
    if (name == "pairwise") return Method::Pairwise;
    if (name == "kahan") return Method::Kahan;
    if (name == "neumaier") return Method::Neumaier;
    if (name == "mixed") return Method::Mixed;
    throw usage_error("unknown summation method: " + name);
}

ExactRational predicted_relative_error(std::size_t n, const ExactRational& epsilon, Method method) {
    if (n < 1) throw usage_error("predicted_relative_error needs n >= 1");
    switch (method) {
    case Method::Naive:
    case Method::Sorted: {
        // eps * sqrt(n), the random-walk model.
        auto [lo, hi] = sqrt_enclosure(ExactRational(static_cast<long>(n)), 64);
        return epsilon * hi;
    }
    case Method::Pairwise: {
        double lg = std::log2(static_cast<double>(n));
        if (lg < 1.0) lg = 1.0;
        auto [lo, hi] = sqrt_enclosure(ExactRational::from_float(lg), 64);
        return epsilon * hi;
    }
    case Method::Kahan:
    case Method::Neumaier:
    case Method::Mixed:
        return epsilon + epsilon;
    }
    throw usage_error("unknown summation method");
}

double predicted_relative_error(std::size_t n, double epsilon, Method method) {
    return to_nearest_double(predicted_relative_error(n, ExactRational::from_float(epsilon), method));
}

LeibnizResult leibniz_partial_sum(const std::function<double(std::size_t)>& term, std::size_t n) {
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        double x = term(k);
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    return {sum + carry, std::fabs(term(n + 1))};
}

SumReport make_report(Method method, double result, const ExactRational& exact,
                      const FormatSpec& fmt) {
    SumReport report;
    report.method = to_string(method);
    report.result = result;
    report.exact = exact;
    ExactRational err = (ExactRational::from_float(result) - exact).abs();
    report.relative_error = exact.is_zero() ? err : err / exact.abs();
    report.error_ulps = err / ulp_at(exact, fmt);
    return report;
}

} // namespace summation
} // namespace fpa
