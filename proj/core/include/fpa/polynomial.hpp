// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/eft.hpp"
#include "fpa/rational.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace fpa {
namespace polynomial {

// Coefficients in ascending degree, a0 ... an; nonempty.
struct Polynomial {
    std::vector<double> coeffs;

    explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw usage_error("polynomial needs at least one coefficient");
    }
    std::size_t degree() const { return coeffs.size() - 1; }
};

// Term-by-term with explicit powers; n(n+1)/2 multiplications.
template <typename N>
N eval_naive(const Polynomial& p, N x) {
    N total = N(p.coeffs[0]);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
        N power = x;
        for (std::size_t k = 1; k < i; ++k) power = power * x;
        total = total + N(p.coeffs[i]) * power;
    }
    return total;
}

// Horner-Ruffini fold: n multiplications, n additions.
template <typename N>
N eval_horner(const Polynomial& p, N x) {
    N acc = N(p.coeffs.back());
    for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) acc = acc * x + N(p.coeffs[i]);
    return acc;
}

// Horner with one rounding per step.
template <typename N>
N eval_horner_fma(const Polynomial& p, N x) {
    using std::fma;
    N acc = N(p.coeffs.back());
    for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) acc = fma(acc, x, N(p.coeffs[i]));
    return acc;
}

// Compensated Horner (EFT residuals of every step evaluated as an error
// polynomial alongside); comparable to doubled working precision while the
// condition number stays below ~1/eps^2.
double eval_horner_compensated(const Polynomial& p, double x);

// Ground truth at a float argument.
ExactRational exact_eval(const Polynomial& p, double x);

// Binomial coefficients of (x - 1)^k, ascending degree; the ill-conditioned
// test family near x = 1.
Polynomial power_of_x_minus_one(int k);

} // namespace polynomial
} // namespace fpa
