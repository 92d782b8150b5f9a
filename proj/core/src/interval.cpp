// SPDX-License-Identifier: Apache-2.0
#include "fpa/interval.hpp"

#include "fpa/eft.hpp"
#include "fpa/formats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fpa {
namespace interval {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// One computed endpoint with what we know about its rounding direction.
// tsign is the sign of (true - computed); known is false when the residual
// cannot be trusted (possible underflow) or was not computed.
struct Endpoint {
    double value;
    int tsign;
    bool known;
    bool indeterminate = false; // nan from inf arithmetic
};

Endpoint ep_add(double x, double y) {
    double s = x + y;
    if (std::isnan(s)) return {0, 0, false, true};
    if (std::isinf(x) || std::isinf(y) || std::isinf(s)) return {s, 0, false};
    DoubleWord<double> dw = two_sum(x, y);
    return {dw.hi, sign_of(dw.lo), true};
}

Endpoint ep_mul(double x, double y) {
    double p = x * y;
    if (std::isnan(p)) return {0, 0, false, true};
    if (std::isinf(x) || std::isinf(y) || std::isinf(p)) return {p, 0, false};
    DoubleWord<double> dw = two_prod(x, y);
    bool trustworthy = residual_trustworthy(dw.hi);
    return {dw.hi, sign_of(dw.lo), trustworthy};
}

Endpoint ep_div(double x, double y) {
    double q = x / y;
    if (std::isnan(q)) return {0, 0, false, true};
    if (std::isinf(x) || std::isinf(y) || std::isinf(q) || y == 0.0) return {q, 0, false};
    double r = std::fma(q, y, -x);
    bool trustworthy = residual_trustworthy(q);
    return {q, -sign_of(r) * sign_of(y), trustworthy};
}

Endpoint ep_sqrt(double x) {
    double r = std::sqrt(x);
    if (std::isnan(r)) return {0, 0, false, true};
    if (std::isinf(r) || r == 0.0) return {r, 0, true};
    double res = std::fma(r, r, -x);
    return {r, -sign_of(res), residual_trustworthy(x)};
}

// Sound lower bound for the endpoint's true value. A +inf result means
// the true value only exceeds the largest finite, so step back inside.
double bound_down(const Endpoint& e) {
    if (e.value == kInf) return std::numeric_limits<double>::max();
    if (e.value == -kInf) return -kInf;
    if (e.known && e.tsign >= 0) return e.value;
    return next_down(e.value);
}

// Sound upper bound.
double bound_up(const Endpoint& e) {
    if (e.value == -kInf) return -std::numeric_limits<double>::max();
    if (e.value == kInf) return kInf;
    if (e.known && e.tsign <= 0) return e.value;
    return next_up(e.value);
}

} // namespace

Interval make_interval(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) throw usage_error("interval endpoints cannot be nan");
    if (lo > hi) throw usage_error("interval requires lo <= hi");
    return {lo, hi};
}

Interval point(double x) { return make_interval(x, x); }

Interval whole_line() { return {-kInf, kInf}; }

bool is_whole_line(const Interval& a) { return a.lo == -kInf && a.hi == kInf; }

Interval iv_add(const Interval& a, const Interval& b) {
    Endpoint lo = ep_add(a.lo, b.lo);
    Endpoint hi = ep_add(a.hi, b.hi);
    if (lo.indeterminate || hi.indeterminate) return whole_line();
    return {bound_down(lo), bound_up(hi)};
}

Interval iv_sub(const Interval& a, const Interval& b) {
    Endpoint lo = ep_add(a.lo, -b.hi);
    Endpoint hi = ep_add(a.hi, -b.lo);
    if (lo.indeterminate || hi.indeterminate) return whole_line();
    return {bound_down(lo), bound_up(hi)};
}

Interval iv_mul(const Interval& a, const Interval& b) {
    double lo = kInf, hi = -kInf;
    for (double x : {a.lo, a.hi}) {
        for (double y : {b.lo, b.hi}) {
            Endpoint e = ep_mul(x, y);
            if (e.indeterminate) return whole_line();
            lo = std::min(lo, bound_down(e));
            hi = std::max(hi, bound_up(e));
        }
    }
    return {lo, hi};
}

Interval iv_div(const Interval& a, const Interval& b, bool allow_zero_divisor) {
    if (b.lo <= 0.0 && 0.0 <= b.hi) {
        if (allow_zero_divisor) return whole_line();
        throw diagnostic_error("interval division by an interval containing zero");
    }
    double lo = kInf, hi = -kInf;
    for (double x : {a.lo, a.hi}) {
        for (double y : {b.lo, b.hi}) {
            Endpoint e = ep_div(x, y);
            if (e.indeterminate) return whole_line();
            lo = std::min(lo, bound_down(e));
            hi = std::max(hi, bound_up(e));
        }
    }
    return {lo, hi};
}

Interval iv_sqrt(const Interval& a) {
    if (a.lo < 0.0) throw diagnostic_error("interval sqrt of a partially negative interval");
    Endpoint lo = ep_sqrt(a.lo);
    Endpoint hi = ep_sqrt(a.hi);
    double lower = bound_down(lo);
    return {lower < 0.0 ? 0.0 : lower, bound_up(hi)};
}

double iv_width(const Interval& a) {
    if (std::isinf(a.lo) || std::isinf(a.hi)) return kInf;
    Endpoint w = ep_add(a.hi, -a.lo);
    return bound_up(w);
}

double iv_midpoint(const Interval& a) {
    if (std::isinf(a.lo) || std::isinf(a.hi))
        throw usage_error("midpoint requires finite endpoints");
    double m = 0.5 * (a.lo + a.hi);
    if (!std::isfinite(m)) m = a.lo / 2.0 + a.hi / 2.0;
    return std::min(std::max(m, a.lo), a.hi);
}

bool iv_contains(const Interval& a, const ExactRational& q) {
    bool above_lo = a.lo == -kInf || !(q < ExactRational::from_float(a.lo));
    bool below_hi = a.hi == kInf || !(ExactRational::from_float(a.hi) < q);
    return above_lo && below_hi;
}

bool iv_contains(const Interval& a, double x) { return a.lo <= x && x <= a.hi; }

bool iv_subset(const Interval& a, const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; }

namespace {

Interval inflate_always(double lo, double hi) { return {next_down(lo), next_up(hi)}; }

} // namespace

DemonDemo iv_demon_demo(std::size_t iterations) {
    if (iterations < 1) throw usage_error("demon demo needs at least one iteration");
    DemonDemo demo;
    const double c = 0.9; // the stored constant is already inexact
    const double d = 0.1;

    Interval eft = point(1.0);
    Interval blind = point(1.0);
    Interval exact_eft = point(1.0);
    Interval exact_blind = point(1.0);
    for (std::size_t i = 0; i < iterations; ++i) {
        eft = iv_add(iv_mul(eft, point(c)), point(d));
        {
            // Same iteration with unconditional eps-inflation.
            double lo = blind.lo * c;
            double hi = blind.hi * c;
            Interval m = inflate_always(std::min(lo, hi), std::max(lo, hi));
            blind = inflate_always(m.lo + d, m.hi + d);
        }
        exact_eft = iv_mul(exact_eft, point(1.0));
        exact_blind = inflate_always(exact_blind.lo * 1.0, exact_blind.hi * 1.0);

        demo.eft_widths.push_back(iv_width(eft));
        demo.inflation_widths.push_back(iv_width(blind));
        demo.exact_eft_widths.push_back(iv_width(exact_eft));
        demo.exact_inflation_widths.push_back(iv_width(exact_blind));
    }
    return demo;
}

} // namespace interval
} // namespace fpa
