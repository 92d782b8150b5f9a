// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/formats.hpp"
#include "fpa/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fpa {
namespace condition {

struct ConditionReport {
    double kappa = 0;           // may be infinite
    double digits_lost_dec = 0; // log10 kappa
    double bits_lost = 0;       // log2 kappa
    bool singular = false;      // kappa infinite or f(x) == 0
};

using ScalarFn = std::function<double(double)>;

// kappa = |x f'(x) / f(x)|, the elasticity's absolute value.
ConditionReport kappa_analytic(const ScalarFn& f, const ScalarFn& df, double x);

// Central-difference substitute, h = max(|x|,1) * eps^(1/3).
ConditionReport kappa_numeric(const ScalarFn& f, double x);

// Composition multiplies condition numbers.
double kappa_compose(double k1, double k2);

// kappa of h -> log1p(h): h / ((1+h) ln(1+h)); the limit form 1/(1+h)
// near zero. Singular toward h = -1.
double kappa_log1p(double h); // domain error for h <= -1

// Named catalog entries for the CLI: f, f', description.
struct CatalogFunction {
    std::string name;
    ScalarFn f;
    ScalarFn df;
    std::string description;
};
// `parameter` feeds the families (the constant of x+c, the exponent of x^n).
CatalogFunction catalog_function(const std::string& name, double parameter);
std::vector<std::string> catalog_names();

struct ProbeResult {
    double plateau_half_width; // first offset with fl(f(x)) != fl(f(x0))
    double sqrt_eps;           // sqrt(radix^(1-p)) of the probed format
};

// Scans geometrically outward from x0 until the evaluated function first
// moves; near a unit-scale quadratic minimum that happens at O(sqrt(eps)).
// fmt must be binary32 or binary64 (the evaluation precision).
ProbeResult min_resolution_probe(const ScalarFn& f, double x0, const FormatSpec& fmt);

} // namespace condition
} // namespace fpa
