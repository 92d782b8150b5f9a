// SPDX-License-Identifier: Apache-2.0
#include "fpa/eft.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace fpa;

namespace {

ExactRational dw_value(const DoubleWord<double>& dw) {
    return ExactRational::from_float(dw.hi) + ExactRational::from_float(dw.lo);
}

} // namespace

TEST_SUITE_BEGIN("eft");

TEST_CASE("two_sum worked examples") {
    auto a = two_sum(1.0, 0x1.0p-60);
    CHECK(a.hi == 1.0);
    CHECK(a.lo == 0x1.0p-60);
    CHECK(dw_value(a) == ExactRational::from_float(1.0) + ExactRational::from_float(0x1.0p-60));

    auto b = two_sum(1.0, 0.0);
    CHECK(b.hi == 1.0);
    CHECK(b.lo == 0.0);

    auto c = two_sum(0x1.0p53, 1.0);
    CHECK(c.hi == 0x1.0p53);
    CHECK(c.lo == 1.0);
}

TEST_CASE("fast_two_sum matches two_sum under its precondition") {
    auto a = fast_two_sum(2.0, 1.0);
    CHECK(a.hi == 3.0);
    CHECK(a.lo == 0.0);
    auto b = fast_two_sum(1.0, 0x1.0p-60);
    CHECK(b.hi == 1.0);
    CHECK(b.lo == 0x1.0p-60);
    auto c = fast_two_sum(-1.0, 0x1.0p-60);
    CHECK(dw_value(c) == ExactRational::from_float(-1.0) + ExactRational::from_float(0x1.0p-60));

    SplitMix64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        double x = test::random_double(rng, -30, 30);
        double y = test::random_double(rng, -30, 30);
        if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
        auto fast = fast_two_sum(x, y);
        auto slow = two_sum(x, y);
        CHECK(fast.hi == slow.hi);
        CHECK(fast.lo == slow.lo);
    }
}

TEST_CASE("two_prod worked examples") {
    auto a = two_prod(134217729.0, 134217729.0); // (2^27+1)^2 = 2^54 + 2^28 + 1
    ExactRational expected =
        ExactRational::from_float(0x1.0p54) + ExactRational::from_float(0x1.0p28) + ExactRational(1);
    CHECK(dw_value(a) == expected);
    CHECK(a.lo == 1.0);

    auto b = two_prod(1.0, 1.0);
    CHECK(b.hi == 1.0);
    CHECK(b.lo == 0.0);

    double third = 1.0 / 3.0;
    auto c = two_prod(3.0, third);
    CHECK(dw_value(c) == ExactRational(3) * ExactRational::from_float(third));
}

TEST_CASE("property: EFT exactness against the oracle") {
    SplitMix64 rng(31);
    for (int i = 0; i < 20000; ++i) {
        double x = test::random_double(rng, -300, 300);
        double y = test::random_double(rng, -300, 300);
        auto s = two_sum(x, y);
        CHECK(dw_value(s) == ExactRational::from_float(x) + ExactRational::from_float(y));
        // normalization: hi absorbs everything representable
        CHECK(s.hi == s.hi + s.lo);

        // symmetry
        auto s2 = two_sum(y, x);
        CHECK(s.hi == s2.hi);
        CHECK(s.lo == s2.lo);

        double px = test::random_double(rng, -200, 200);
        double py = test::random_double(rng, -200, 200);
        auto p = two_prod(px, py);
        CHECK(dw_value(p) == ExactRational::from_float(px) * ExactRational::from_float(py));
        CHECK(p.hi == p.hi + p.lo);
    }
}

TEST_CASE("the fma sentinel holds on this host") {
    CHECK(detail::fma_residual_is_exact());
    // The split fallback must satisfy the same contract regardless.
    SplitMix64 rng(37);
    for (int i = 0; i < 2000; ++i) {
        double x = test::random_double(rng, -100, 100);
        double y = test::random_double(rng, -100, 100);
        auto p = detail::two_prod_split(x, y);
        CHECK(dw_value(p) == ExactRational::from_float(x) * ExactRational::from_float(y));
    }
}

TEST_SUITE_END();
