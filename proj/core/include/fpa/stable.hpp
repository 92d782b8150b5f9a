// SPDX-License-Identifier: Apache-2.0
#pragma once

#ifdef __FAST_MATH__
#error fast math is enabled; the stable evaluations here depend on the written parenthesization
#endif

#include "fpa/eft.hpp"
#include "fpa/formats.hpp"
#include "fpa/rational.hpp"

#include <cmath>
#include <utility>

namespace fpa {
namespace stable {

// fl(fl(a^2) - fl(b^2)): catastrophic when a ~ b, overflow-prone when large.
template <typename N>
N diff_squares_naive(N a, N b) {
    return a * a - b * b;
}

// fl(fl(a-b) * fl(a+b)): at worst a benign cancellation.
template <typename N>
N diff_squares_factored(N a, N b) {
    return (a - b) * (a + b);
}

// Simulator variants; operands must share a format. Flags accumulate over
// the whole evaluation.
ToyResult diff_squares_naive(const ToyFloat& a, const ToyFloat& b);
ToyResult diff_squares_factored(const ToyFloat& a, const ToyFloat& b);

struct QuadraticRoots {
    enum class Kind { TwoReal, DoubleReal, ComplexPair };
    Kind kind = Kind::TwoReal;
    // TwoReal: x1 <= x2. DoubleReal: x1 == x2. ComplexPair: x1 = re,
    // x2 = im > 0 (conjugate implied).
    double x1 = 0;
    double x2 = 0;
    double discriminant_used = 0;
};

// Textbook formula, both signs; cancels catastrophically in the smaller
// root when b^2 >> |4ac|.
QuadraticRoots quadratic_naive(double a, double b, double c);

// q = -sgn(b)(|b| + sqrt(D)) with the EFT discriminant; the roots come out
// of like-sign sums only. sgn(0) = +1.
QuadraticRoots quadratic_robust(double a, double b, double c);

// b^2 - 4ac via two error-free products; exact when the cancellation
// between the leading terms is total.
double discriminant_eft(double a, double b, double c);

// Edges relabeled so a >= b >= c > 0.
struct TriangleSides {
    double a, b, c;
    static TriangleSides sorted(double x, double y, double z);
    // Kahan's validity test; the needle-safe form of the triangle inequality.
    bool valid() const { return c - (a - b) >= 0.0; }
};

// sqrt(p(p-a)(p-b)(p-c)) with p the half perimeter.
double heron_naive(const TriangleSides& t);

// (1/4) sqrt([a+(b+c)] [c-(a-b)] [c+(a-b)] [a+(b-c)]), brackets evaluated
// exactly as written. Build with re-association disabled or the needle
// canary test fails.
double area_kahan(const TriangleSides& t);

// Non-triangle inputs (c - (a-b) < 0) raise diagnostic_error.

// Modulus via scaling by the larger component; no intermediate overflow
// for representable results.
template <typename N>
N complex_abs_robust(N re, N im) {
    using std::fabs;
    using std::sqrt;
    N ar = fabs(re);
    N ai = fabs(im);
    if (ai > ar) std::swap(ar, ai);
    if (!(ar > N(0.0))) return ar; // both zero
    N t = ai / ar;
    return ar * sqrt(N(1.0) + t * t);
}

template <typename N>
N complex_abs_naive(N re, N im) {
    using std::sqrt;
    return sqrt(re * re + im * im);
}

struct ComplexDivResult {
    double re = 0;
    double im = 0;
    ExceptionFlags flags;
};

// Smith's scaled formulation of (a_re + i a_im) / (b_re + i b_im).
ComplexDivResult complex_div_robust(double a_re, double a_im, double b_re, double b_im);

// 333.75 b^6 + a^2 (11 a^2 b^2 - b^6 - 121 b^4 - 2) + 5.5 b^8 + a/(2b),
// evaluated in the fixed order below; the classic cancellation showcase.
template <typename N>
N rump_eval(N a, N b) {
    N b2 = b * b;
    N b4 = b2 * b2;
    N b6 = b4 * b2;
    N b8 = b4 * b4;
    N a2 = a * a;
    N term1 = N(333.75) * b6;
    N inner = N(11.0) * a2 * b2 - b6 - N(121.0) * b4 - N(2.0);
    N term2 = a2 * inner;
    N term3 = N(5.5) * b8;
    return term1 + term2 + term3 + a / (N(2.0) * b);
}

double rump_expression(double a, double b); // usage_error when b == 0
ExactRational exact_rump(const ExactRational& a, const ExactRational& b);

} // namespace stable
} // namespace fpa
