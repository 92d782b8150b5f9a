// SPDX-License-Identifier: Apache-2.0
#include "fpa/formats.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace fpa;

namespace {

const FormatSpec kDec3{10, 3, -20, 20, true};
const FormatSpec kDec2{10, 2, -20, 20, true};
const FormatSpec kDec1{10, 1, -20, 20, true};

ToyFloat dec(const char* literal, const FormatSpec& fmt = kDec3) {
    return round_rational(parse_decimal(literal), fmt, RoundingMode::NearestEven).value;
}

ExactRational random_rational(SplitMix64& rng) {
    long num = static_cast<long>(rng.next_below(2000001)) - 1000000;
    long den = static_cast<long>(rng.next_below(999983)) + 1;
    long scale = static_cast<long>(rng.next_below(13)) - 6;
    return ExactRational(BigInt(num), BigInt(den)) * ExactRational::scaled(BigInt(1), 10, scale);
}

} // namespace

TEST_SUITE_BEGIN("formats");

TEST_CASE("round_rational worked examples") {
    // round(3.34^2) in the three-digit decimal format
    ToyResult r = round_rational(parse_decimal("11.1556"), kDec3, RoundingMode::NearestEven);
    CHECK(r.value.to_rational() == parse_decimal("11.2"));
    CHECK(r.flags.inexact);

    ToyResult one = round_rational(ExactRational(1), kDec3, RoundingMode::NearestEven);
    CHECK(one.value.to_rational() == ExactRational(1));
    CHECK(!one.flags.any());
    for (RoundingMode m : {RoundingMode::TowardPositive, RoundingMode::TowardNegative,
                           RoundingMode::TowardZero, RoundingMode::AwayFromZero,
                           RoundingMode::FarthestFromExact})
        CHECK(round_rational(ExactRational(1), kDec3, m).value.to_rational() == ExactRational(1));

    ToyResult r35 = round_rational(parse_decimal("3.47"), kDec2, RoundingMode::NearestEven);
    CHECK(r35.value.to_rational() == parse_decimal("3.5"));
    CHECK(r35.flags.inexact);
}

TEST_CASE("toy arithmetic: the catastrophic chain's benign steps") {
    ToyFloat a = dec("11.2"), b = dec("11.1");
    ToyResult diff = toy_sub(a, b);
    CHECK(diff.value.to_rational() == parse_decimal("0.1"));
    CHECK(!diff.flags.inexact);

    ToyResult benign = toy_sub(dec("3.34"), dec("3.33"));
    CHECK(benign.value.to_rational() == parse_decimal("0.01"));
    CHECK(!benign.flags.inexact);

    // x + (-x) -> +0
    SplitMix64 rng(3);
    for (int i = 0; i < 50; ++i) {
        ExactRational q = random_rational(rng);
        if (q.is_zero()) continue;
        ToyFloat x = round_rational(q, kDec3, RoundingMode::NearestEven).value;
        if (!x.is_finite() || x.is_zero()) continue;
        ToyFloat nx = round_rational(-x.to_rational(), kDec3, RoundingMode::NearestEven).value;
        ToyResult z = toy_add(x, nx);
        CHECK(z.value.is_zero());
        CHECK(!z.value.negative());
    }
}

TEST_CASE("toy special values") {
    ToyFloat inf = ToyFloat::infinity(kDec3, false);
    ToyFloat ninf = ToyFloat::infinity(kDec3, true);
    ToyFloat zero = ToyFloat::zero(kDec3);
    ToyFloat one = dec("1");

    CHECK(toy_add(inf, ninf).flags.invalid);
    CHECK(toy_add(inf, ninf).value.is_nan());
    CHECK(toy_mul(inf, zero).flags.invalid);
    CHECK(toy_div(zero, zero).flags.invalid);

    ToyResult div0 = toy_div(one, zero);
    CHECK(div0.flags.divide_by_zero);
    CHECK(div0.value.is_inf());
    CHECK(!div0.value.negative());
    ToyResult div0n = toy_div(dec("-1"), zero);
    CHECK(div0n.value.is_inf());
    CHECK(div0n.value.negative());

    CHECK(!toy_equal(ToyFloat::nan(kDec3), ToyFloat::nan(kDec3)));
    CHECK(toy_equal(zero, ToyFloat::zero(kDec3, true))); // zeros compare equal

    CHECK_THROWS_AS(toy_add(one, dec("1", kDec2)), usage_error);
}

TEST_CASE("ulp and lattice stepping") {
    CHECK(ulp(dec("1.00")).to_fraction_string() == "1/100");
    ToyFloat fone = round_rational(ExactRational(1), FormatSpec::binary32(), RoundingMode::NearestEven).value;
    CHECK(ulp(fone) == ExactRational::scaled(BigInt(1), 2, -23));
    // checked against the oracle spacing
    CHECK(successor(fone).to_rational() - fone.to_rational() == ulp(fone));

    // successor(largest finite) -> +inf
    ToyFloat big = ToyFloat::finite(kDec3, false, 999, 20);
    CHECK(successor(big).is_inf());
    CHECK(toy_equal(predecessor(successor(dec("1.00"))), dec("1.00")));

    // crossing into subnormals and zero
    ToyFloat minsub = ToyFloat::finite(kDec3, false, 1, -20);
    CHECK(minsub.is_subnormal());
    CHECK(predecessor(minsub).is_zero());
    ToyFloat neg_minsub = ToyFloat::finite(kDec3, true, 1, -20);
    CHECK(successor(neg_minsub).is_zero());
    CHECK(successor(neg_minsub).negative());

    CHECK_THROWS_AS(ulp(ToyFloat::nan(kDec3)), usage_error);
    CHECK_THROWS_AS(successor(ToyFloat::infinity(kDec3, false)), usage_error);
}

TEST_CASE("correct vs faithful rounding") {
    // A value strictly between two lattice points: both neighbors faithful,
    // only the nearer one correct.
    ExactRational q = parse_decimal("1.004");
    ToyFloat below = dec("1.00");
    ToyFloat above = dec("1.01");
    CHECK(is_faithful_rounding(q, below));
    CHECK(is_faithful_rounding(q, above));
    CHECK(is_correct_rounding(q, below));
    CHECK(!is_correct_rounding(q, above));
    CHECK(!is_faithful_rounding(q, dec("1.02")));

    // exactly representable: only itself
    ExactRational exact = parse_decimal("1.01");
    CHECK(is_correct_rounding(exact, above));
    CHECK(is_faithful_rounding(exact, above));
    CHECK(!is_faithful_rounding(exact, below));

    // midpoint: both faithful, even significand correct
    ExactRational mid = parse_decimal("1.005"); // between 1.00 (even) and 1.01 (odd)
    CHECK(is_faithful_rounding(mid, below));
    CHECK(is_faithful_rounding(mid, above));
    CHECK(is_correct_rounding(mid, below));
    CHECK(!is_correct_rounding(mid, above));
}

TEST_CASE("double rounding: the 3.47 example") {
    DoubleRoundResult dr = double_round(parse_decimal("3.47"), kDec2, kDec1);
    CHECK(dr.chained.to_rational() == ExactRational(4));
    CHECK(dr.direct.to_rational() == ExactRational(3));
    CHECK(dr.differs);

    // exactly representable in the low precision: no difference
    DoubleRoundResult same = double_round(ExactRational(2), kDec2, kDec1);
    CHECK(!same.differs);

    CHECK_THROWS_AS(double_round(ExactRational(1), FormatSpec::binary32(), kDec1), usage_error);
    CHECK_THROWS_AS(double_round(ExactRational(1), kDec1, kDec2), usage_error);
}

TEST_CASE("property: monotone rounding in every mode") {
    SplitMix64 rng(101);
    for (RoundingMode mode : {RoundingMode::NearestEven, RoundingMode::TowardPositive,
                              RoundingMode::TowardNegative, RoundingMode::TowardZero,
                              RoundingMode::AwayFromZero}) {
        for (int i = 0; i < 400; ++i) {
            ExactRational q1 = random_rational(rng);
            ExactRational q2 = random_rational(rng);
            if (q2 < q1) std::swap(q1, q2);
            ToyFloat r1 = round_rational(q1, kDec3, mode).value;
            ToyFloat r2 = round_rational(q2, kDec3, mode).value;
            CHECK(!toy_less(r2, r1));
        }
    }
}

TEST_CASE("property: half-ulp bound and directed bracketing") {
    SplitMix64 rng(202);
    ExactRational half(BigInt(1), BigInt(2));
    for (int i = 0; i < 500; ++i) {
        ExactRational q = random_rational(rng);
        if (q.is_zero()) continue;
        ToyResult near = round_rational(q, kDec3, RoundingMode::NearestEven);
        if (!near.value.is_finite() || near.flags.underflow) continue;
        ExactRational err = (near.value.to_rational() - q).abs();
        CHECK(err <= half * ulp_at(q, kDec3));

        ToyFloat down = round_rational(q, kDec3, RoundingMode::TowardNegative).value;
        ToyFloat up = round_rational(q, kDec3, RoundingMode::TowardPositive).value;
        if (down.is_finite()) CHECK(down.to_rational() <= q);
        if (up.is_finite()) CHECK(q <= up.to_rational());
        if (down.is_finite() && up.is_finite())
            CHECK((up.to_rational() - down.to_rational()) <= ulp_at(q, kDec3));
    }
}

TEST_CASE("farthest-from-exact picks the non-nearest neighbor") {
    // 1.004 is nearer 1.00; farthest rounds to 1.01.
    ToyFloat f = round_rational(parse_decimal("1.004"), kDec3, RoundingMode::FarthestFromExact).value;
    CHECK(f.to_rational() == parse_decimal("1.01"));
    ToyFloat g = round_rational(parse_decimal("1.006"), kDec3, RoundingMode::FarthestFromExact).value;
    CHECK(g.to_rational() == parse_decimal("1.00"));
    // exact values are untouched
    ToyResult e = round_rational(parse_decimal("1.01"), kDec3, RoundingMode::FarthestFromExact);
    CHECK(e.value.to_rational() == parse_decimal("1.01"));
    CHECK(!e.flags.inexact);
}

TEST_CASE("gradual underflow: subtraction hits zero only at equality") {
    SplitMix64 rng(303);
    FormatSpec tiny{10, 3, -5, 5, true};
    for (int i = 0; i < 300; ++i) {
        ExactRational q1 = random_rational(rng);
        ExactRational q2 = random_rational(rng);
        ToyFloat x = round_rational(q1, tiny, RoundingMode::NearestEven).value;
        ToyFloat y = round_rational(q2, tiny, RoundingMode::NearestEven).value;
        if (!x.is_finite() || !y.is_finite()) continue;
        ToyFloat d = toy_sub(x, y).value;
        CHECK(d.is_zero() == toy_equal(x, y));
    }
    // ... while the same format without subnormals flushes differences.
    FormatSpec flush{10, 3, -5, 5, false};
    ToyFloat a = ToyFloat::finite(flush, false, 101, -5);
    ToyFloat b = ToyFloat::finite(flush, false, 100, -5);
    CHECK(toy_sub(a, b).value.is_zero()); // 1e-7 flushes
    CHECK(toy_sub(a, b).flags.underflow);
}

TEST_CASE("overflow and underflow flags") {
    ToyResult over = round_rational(parse_decimal("1e25"), kDec3, RoundingMode::NearestEven);
    CHECK(over.value.is_inf());
    CHECK(over.flags.overflow);
    ToyResult clamp = round_rational(parse_decimal("1e25"), kDec3, RoundingMode::TowardZero);
    CHECK(clamp.value.to_rational() == kDec3.max_finite());
    CHECK(clamp.flags.overflow);

    ToyResult under = round_rational(parse_decimal("1e-24"), kDec3, RoundingMode::NearestEven);
    CHECK(under.value.is_zero());
    CHECK(under.flags.underflow);
    CHECK(under.flags.inexact);

    // gradual: a value below min normal lands on the subnormal lattice
    ToyResult sub = round_rational(parse_decimal("1.23e-21"), kDec3, RoundingMode::NearestEven);
    CHECK(sub.value.is_subnormal());
    CHECK(sub.value.to_rational() == parse_decimal("1.2e-21"));
}

TEST_CASE("format spec parsing") {
    FormatSpec f = FormatSpec::parse("toy:10,3,-20,20");
    CHECK(f == kDec3);
    CHECK(FormatSpec::parse("binary32") == FormatSpec::binary32());
    CHECK(FormatSpec::parse("toy:2,11,-14,15") == FormatSpec::binary16());
    FormatSpec nosub = FormatSpec::parse("toy:10,3,-20,20,nosub");
    CHECK(!nosub.subnormals_enabled);
    FormatSpec short_form = FormatSpec::parse("toy:10,3");
    CHECK(short_form.precision_p == 3);
    CHECK_THROWS_AS(FormatSpec::parse("toy:3,5,-1,1"), usage_error);
    CHECK_THROWS_AS(FormatSpec::parse("toy:10"), usage_error);
    CHECK_THROWS_AS(FormatSpec::parse("ieee754"), usage_error);
    CHECK(FormatSpec::binary16().to_text() == "binary16");
}

TEST_SUITE_END();
