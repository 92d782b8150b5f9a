// SPDX-License-Identifier: Apache-2.0
#include "fpa/polynomial.hpp"

namespace fpa {
namespace polynomial {

double eval_horner_compensated(const Polynomial& p, double x) {
    const auto& a = p.coeffs;
    double s = a.back();
    double err = 0.0; // running Horner evaluation of the two residual streams
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        DoubleWord<double> prod = two_prod(s, x);
        DoubleWord<double> sum = two_sum(prod.hi, a[i]);
        s = sum.hi;
        err = err * x + (prod.lo + sum.lo);
    }
    return s + err;
}

ExactRational exact_eval(const Polynomial& p, double x) {
    ExactRational xv = ExactRational::from_float(x);
    ExactRational acc = ExactRational::from_float(p.coeffs.back());
    for (std::size_t i = p.coeffs.size() - 1; i-- > 0;)
        acc = acc * xv + ExactRational::from_float(p.coeffs[i]);
    return acc;
}

Polynomial power_of_x_minus_one(int k) {
    if (k < 0) throw usage_error("exponent must be nonnegative");
    // (x - 1)^k = sum_j C(k, j) (-1)^(k-j) x^j
    std::vector<double> coeffs(static_cast<std::size_t>(k) + 1);
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        coeffs[static_cast<std::size_t>(j)] = ((k - j) % 2 == 0 ? binom : -binom);
        binom = binom * (k - j) / (j + 1);
    }
    return Polynomial(std::move(coeffs));
}

} // namespace polynomial
} // namespace fpa
