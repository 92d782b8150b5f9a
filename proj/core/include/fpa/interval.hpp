// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/rational.hpp"

#include <cstddef>
#include <vector>

namespace fpa {
namespace interval {

// Closed interval [lo, hi] over binary64 endpoints (infinite endpoints
// allowed, nan never). Every operation preserves containment: the exact
// real result of the operation on any contained reals is contained in the
// output.
struct Interval {
    double lo;
    double hi;
};

Interval make_interval(double lo, double hi); // validates lo <= hi and no nan
Interval point(double x);
Interval whole_line();
bool is_whole_line(const Interval& a);

// Endpoint arithmetic with outward adjustment. An endpoint whose EFT
// residual proves it exact stays tight; anything else widens by one
// lattice step. Indeterminate endpoint forms (inf - inf, 0 * inf)
// degrade to the whole line.
Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);

// Requires 0 outside b; with allow_zero_divisor the violation yields the
// whole line instead of throwing.
Interval iv_div(const Interval& a, const Interval& b, bool allow_zero_divisor = false);

Interval iv_sqrt(const Interval& a); // domain error when a.lo < 0

double iv_width(const Interval& a);    // hi - lo, rounded toward +infinity
double iv_midpoint(const Interval& a); // finite endpoints only
bool iv_contains(const Interval& a, const ExactRational& q);
bool iv_contains(const Interval& a, double x);
bool iv_subset(const Interval& a, const Interval& b); // a inside b

// The interval-growth demonstration: iterate x <- x*c + d from a point
// interval and record widths, under exactness-aware outward rounding and
// under blind eps-inflation (which widens even exact operations). The
// exact_* tracks iterate x <- x*1, where one scheme stays at width zero
// and the other grows anyway.
struct DemonDemo {
    std::vector<double> eft_widths;
    std::vector<double> inflation_widths;
    std::vector<double> exact_eft_widths;
    std::vector<double> exact_inflation_widths;
};
DemonDemo iv_demon_demo(std::size_t iterations);

} // namespace interval
} // namespace fpa
