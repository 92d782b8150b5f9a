// SPDX-License-Identifier: Apache-2.0
#include "fpa/polynomial.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace fpa;
using namespace fpa::polynomial;

namespace {

// Counting arithmetic type for the operation-count assertion.
struct Counted {
    double v;
    static inline int mults = 0;
    static inline int adds = 0;
    explicit Counted(double x) : v(x) {}
    friend Counted operator*(Counted a, Counted b) {
        ++mults;
        return Counted(a.v * b.v);
    }
    friend Counted operator+(Counted a, Counted b) {
        ++adds;
        return Counted(a.v + b.v);
    }
    static void reset() { mults = adds = 0; }
};

} // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("an exactly representable root evaluates to zero everywhere") {
    Polynomial p({1.0, -2.0, 1.0}); // (x-1)^2
    CHECK(eval_naive(p, 1.0) == 0.0);
    CHECK(eval_horner(p, 1.0) == 0.0);
    CHECK(eval_horner_fma(p, 1.0) == 0.0);
    CHECK(eval_horner_compensated(p, 1.0) == 0.0);

    Polynomial constant({3.5});
    CHECK(eval_horner(constant, 17.0) == 3.5);
    CHECK(eval_horner_compensated(constant, 17.0) == 3.5);
    CHECK_THROWS_AS(Polynomial({}), usage_error);
}

TEST_CASE("(x-1)^7 near 1: horner collapses, compensation carries through") {
    Polynomial p = power_of_x_minus_one(7);
    CHECK(p.coeffs == std::vector<double>{-1, 7, -21, 35, -35, 21, -7, 1});

    // cond ~ 2^63: firmly inside the compensated scheme's reach
    {
        double x = 1.0 + 0x1.0p-8;
        ExactRational exact = exact_eval(p, x); // 2^-56 exactly
        CHECK(exact == ExactRational::scaled(BigInt(1), 2, -56));
        double horner = eval_horner(p, x);
        double comp = eval_horner_compensated(p, x);
        CHECK(test::rel_error(horner, exact) > 0.5); // no digits survive
        CHECK(test::ulps_between64(comp, exact) <= 2.0);
    }
    // cond ~ 2^147: beyond every double-word scheme; the compensated value
    // still lands absolutely close (the plain-Horner noise is gone)
    {
        double x = 1.0 + 0x1.0p-20;
        ExactRational exact = exact_eval(p, x); // 2^-140
        CHECK(exact == ExactRational::scaled(BigInt(1), 2, -140));
        double comp = eval_horner_compensated(p, x);
        ExactRational comp_abs_err = (ExactRational::from_float(comp) - exact).abs();
        CHECK(comp_abs_err < ExactRational::scaled(BigInt(1), 2, -90));
    }
}

TEST_CASE("property: the evaluators agree on well-conditioned inputs") {
    SplitMix64 rng(139);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> coeffs;
        std::size_t degree = 1 + rng.next_below(8);
        for (std::size_t i = 0; i <= degree; ++i)
            coeffs.push_back(test::random_double(rng, -3, 3));
        Polynomial p(std::move(coeffs));
        double x = test::random_double(rng, -2, 2);
        ExactRational exact = exact_eval(p, x);
        if (exact.is_zero()) continue;
        // keep only well-conditioned evaluations
        double magnitude = std::fabs(to_nearest_double(exact));
        if (magnitude < 1e-6) continue;
        CHECK(test::ulps_between64(eval_horner(p, x), exact) < 64.0);
        CHECK(test::ulps_between64(eval_horner_fma(p, x), exact) < 64.0);
        CHECK(test::ulps_between64(eval_horner_compensated(p, x), exact) <= 1.0);
        CHECK(test::ulps_between64(eval_naive(p, x), exact) < 256.0);
    }
}

TEST_CASE("property: compensation dominates fma dominates horner near x = 1") {
    SplitMix64 rng(149);
    int comp_le_fma = 0, fma_le_horner = 0, trials = 0;
    for (int k = 3; k <= 9; ++k) {
        Polynomial p = power_of_x_minus_one(k);
        for (int i = 0; i < 30; ++i) {
            double x = 1.0 + std::ldexp(rng.next_double() - 0.5, -7);
            ExactRational exact = exact_eval(p, x);
            if (exact.is_zero()) continue;
            double e_h = test::rel_error(eval_horner(p, x), exact);
            double e_f = test::rel_error(eval_horner_fma(p, x), exact);
            double e_c = test::rel_error(eval_horner_compensated(p, x), exact);
            ++trials;
            if (e_c <= e_f) ++comp_le_fma;
            if (e_f <= e_h) ++fma_le_horner;
        }
    }
    // dominance in the median, not pointwise
    CHECK(comp_le_fma * 2 > trials);
    CHECK(fma_le_horner * 2 > trials);
}

TEST_CASE("horner spends exactly n multiplications and n additions") {
    Polynomial p({4.0, -3.0, 2.0, -1.0, 5.0}); // degree 4
    Counted::reset();
    eval_horner(p, Counted(1.25));
    CHECK(Counted::mults == 4);
    CHECK(Counted::adds == 4);

    // the naive scheme pays n(n+1)/2 multiplications
    Counted::reset();
    eval_naive(p, Counted(1.25));
    CHECK(Counted::mults == 10);
}

TEST_SUITE_END();
