// SPDX-License-Identifier: Apache-2.0
#include "fpa/stable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fpa {
namespace stable {

ToyResult diff_squares_naive(const ToyFloat& a, const ToyFloat& b) {
    ToyResult a2 = toy_mul(a, a);
    ToyResult b2 = toy_mul(b, b);
    ToyResult d = toy_sub(a2.value, b2.value);
    return {d.value, a2.flags | b2.flags | d.flags};
}

ToyResult diff_squares_factored(const ToyFloat& a, const ToyFloat& b) {
    ToyResult diff = toy_sub(a, b);
    ToyResult sum = toy_add(a, b);
    ToyResult p = toy_mul(diff.value, sum.value);
    return {p.value, diff.flags | sum.flags | p.flags};
}

namespace {

QuadraticRoots classify(double a, double b, double disc, double x1, double x2) {
    QuadraticRoots roots;
    roots.discriminant_used = disc;
    if (disc < 0.0) {
        roots.kind = QuadraticRoots::Kind::ComplexPair;
        roots.x1 = -b / (2.0 * a);
        roots.x2 = std::sqrt(-disc) / std::fabs(2.0 * a);
        return roots;
    }
    if (disc == 0.0) {
        roots.kind = QuadraticRoots::Kind::DoubleReal;
        roots.x1 = roots.x2 = -b / (2.0 * a);
        return roots;
    }
    roots.kind = QuadraticRoots::Kind::TwoReal;
    roots.x1 = std::min(x1, x2);
    roots.x2 = std::max(x1, x2);
    return roots;
}

} // namespace

QuadraticRoots quadratic_naive(double a, double b, double c) {
    if (a == 0.0) throw usage_error("quadratic requires a != 0");
    double disc = b * b - 4.0 * a * c;
    if (disc > 0.0) {
        double sq = std::sqrt(disc);
        double x1 = (-b + sq) / (2.0 * a);
        double x2 = (-b - sq) / (2.0 * a);
        return classify(a, b, disc, x1, x2);
    }
    return classify(a, b, disc, 0.0, 0.0);
}

namespace {

// b^2 - 4ac as an unevaluated double-word; exact through total cancellation.
DoubleWord<double> discriminant_dw(double a, double b, double c) {
    DoubleWord<double> bb = two_prod(b, b);
    DoubleWord<double> ac = two_prod(4.0 * a, c);
    // total cancellation can zero head.hi while residuals survive, so the
    // renormalizations must not assume any magnitude ordering
    DoubleWord<double> head = two_sum(bb.hi, -ac.hi);
    DoubleWord<double> tail = two_sum(bb.lo, -ac.lo);
    DoubleWord<double> mid = two_sum(head.lo, tail.hi);
    DoubleWord<double> out = two_sum(head.hi, mid.hi);
    out.lo += mid.lo + tail.lo;
    return two_sum(out.hi, out.lo);
}

// sqrt of a positive double-word, one Newton correction off sqrt(hi).
DoubleWord<double> sqrt_dw(DoubleWord<double> d) {
    double r0 = std::sqrt(d.hi);
    double residual = std::fma(r0, r0, -d.hi); // r0^2 - hi, exact
    double correction = (d.lo - residual) / (2.0 * r0);
    return fast_two_sum(r0, correction);
}

// (num.hi + num.lo) / den to full working accuracy.
double div_dw_by(DoubleWord<double> num, double den) {
    double q0 = num.hi / den;
    DoubleWord<double> back = two_prod(q0, den);
    double remainder = ((num.hi - back.hi) - back.lo) + num.lo;
    return q0 + remainder / den;
}

// num / (den.hi + den.lo) to full working accuracy.
double div_by_dw(double num, DoubleWord<double> den) {
    double q0 = num / den.hi;
    double remainder = -std::fma(q0, den.hi, -num); // num - q0*den.hi
    return q0 + (remainder - q0 * den.lo) / den.hi;
}

} // namespace

QuadraticRoots quadratic_robust(double a, double b, double c) {
    if (a == 0.0) throw usage_error("quadratic requires a != 0");
    DoubleWord<double> disc_dw = discriminant_dw(a, b, c);
    double disc = disc_dw.hi + disc_dw.lo;
    if (disc > 0.0) {
        DoubleWord<double> sq = sqrt_dw(disc_dw);
        double sign_b = b < 0.0 ? -1.0 : 1.0; // sgn(0) = +1
        // q = -sgn(b)(|b| + sqrt(D)), a like-sign sum carried as a double-word
        DoubleWord<double> mag = two_sum(std::fabs(b), sq.hi);
        mag.lo += sq.lo;
        mag = fast_two_sum(mag.hi, mag.lo);
        double x1 = -sign_b * div_dw_by(mag, 2.0 * a);
        double x2 = -sign_b * div_by_dw(2.0 * c, mag);
        return classify(a, b, disc, x1, x2);
    }
    return classify(a, b, disc, 0.0, 0.0);
}

double discriminant_eft(double a, double b, double c) {
    DoubleWord<double> d = discriminant_dw(a, b, c);
    return d.hi + d.lo;
}

TriangleSides TriangleSides::sorted(double x, double y, double z) {
    if (!(x > 0.0 && y > 0.0 && z > 0.0)) throw usage_error("triangle sides must be positive");
    double a = x, b = y, c = z;
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    return {a, b, c};
}

double heron_naive(const TriangleSides& t) {
    if (!t.valid()) throw diagnostic_error("sides do not form a triangle");
    double p = (t.a + t.b + t.c) / 2.0;
    return std::sqrt(p * (p - t.a) * (p - t.b) * (p - t.c));
}

double area_kahan(const TriangleSides& t) {
    if (!t.valid()) throw diagnostic_error("sides do not form a triangle");
    double a = t.a, b = t.b, c = t.c;
    double f1 = a + (b + c);
    double f2 = c - (a - b);
    double f3 = c + (a - b);
    double f4 = a + (b - c);
    return std::sqrt(f1 * f2 * f3 * f4) / 4.0;
}

ComplexDivResult complex_div_robust(double a_re, double a_im, double b_re, double b_im) {
    ComplexDivResult out;
    if (b_re == 0.0 && b_im == 0.0) {
        if (a_re == 0.0 && a_im == 0.0) {
            out.flags.invalid = true;
            out.re = out.im = std::numeric_limits<double>::quiet_NaN();
            return out;
        }
        out.flags.divide_by_zero = true;
        out.re = a_re / 0.0;
        out.im = a_im / 0.0;
        return out;
    }
    if (std::fabs(b_re) >= std::fabs(b_im)) {
        double r = b_im / b_re;
        double den = b_re + b_im * r;
        out.re = (a_re + a_im * r) / den;
        out.im = (a_im - a_re * r) / den;
    } else {
        double r = b_re / b_im;
        double den = b_im + b_re * r;
        out.re = (a_re * r + a_im) / den;
        out.im = (a_im * r - a_re) / den;
    }
    return out;
}

double rump_expression(double a, double b) {
    if (b == 0.0) throw usage_error("rump expression requires b != 0");
    return rump_eval<double>(a, b);
}

ExactRational exact_rump(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) throw usage_error("rump expression requires b != 0");
    ExactRational b2 = b * b;
    ExactRational b4 = b2 * b2;
    ExactRational b6 = b4 * b2;
    ExactRational b8 = b4 * b4;
    ExactRational a2 = a * a;
    ExactRational c33375(BigInt(1335), BigInt(4)); // 333.75
    ExactRational c55(BigInt(11), BigInt(2));      // 5.5
    ExactRational inner = ExactRational(11) * a2 * b2 - b6 - ExactRational(121) * b4 - ExactRational(2);
    return c33375 * b6 + a2 * inner + c55 * b8 + a / (ExactRational(2) * b);
}

} // namespace stable
} // namespace fpa
