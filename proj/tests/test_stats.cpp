// SPDX-License-Identifier: Apache-2.0
#include "fpa/stats.hpp"

#include "support.hpp"

#include <doctest.h>

#include <vector>

using namespace fpa;
using namespace fpa::stats;

TEST_SUITE_BEGIN("stats");

TEST_CASE("textbook quartet") {
    std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    ExactRational five_thirds{BigInt(5), BigInt(3)};
    CHECK(exact_variance_sample(xs) == five_thirds);
    CHECK(test::ulps_between64(variance_naive(xs, FormatSpec::binary64()), five_thirds) <= 2.0);
    CHECK(test::ulps_between64(variance_two_pass(xs, FormatSpec::binary64()), five_thirds) <= 1.0);
    auto acc = welford_accumulate<double>(xs);
    CHECK(test::ulps_between64(variance_sample(acc), five_thirds) <= 2.0);

    std::vector<double> constant(10, 3.25);
    CHECK(variance_naive(constant, FormatSpec::binary64()) == 0.0);
    CHECK(variance_sample(welford_accumulate<double>(constant)) == 0.0);
    CHECK_THROWS_AS(variance_naive(std::vector<double>{1.0}, FormatSpec::binary64()), usage_error);
}

TEST_CASE("the shifted quartet wrecks the naive formula in binary32") {
    std::vector<double> xs{1e9 + 1.0, 1e9 + 2.0, 1e9 + 3.0, 1e9 + 4.0};
    ExactRational five_thirds{BigInt(5), BigInt(3)};
    CHECK(exact_variance_sample(xs) == five_thirds);

    double naive = variance_naive(xs, FormatSpec::binary32());
    // catastrophic: negative or off by far more than 100 %
    bool wrecked = naive <= 0.0 || test::rel_error(naive, five_thirds) > 1.0;
    CHECK(wrecked);

    // welford in the native working precision keeps the digits
    double welford = variance_sample(welford_accumulate<double>(xs));
    CHECK(test::rel_error(welford, five_thirds) < 1e-3);
    // corrected two-pass survives even a binary32 pipeline
    double two_pass32 = variance_two_pass(xs, FormatSpec::binary32());
    CHECK(test::rel_error(two_pass32, five_thirds) < 1e-6);
    double two_pass64 = variance_two_pass(xs, FormatSpec::binary64());
    CHECK(test::rel_error(two_pass64, five_thirds) < 1e-12);
}

TEST_CASE("single element accumulator") {
    auto acc = welford_update(OnlineStats<double>{}, 42.0);
    CHECK(acc.n == 1);
    CHECK(acc.mean == 42.0);
    CHECK(acc.m2 == 0.0);
    CHECK_THROWS_AS(variance_sample(acc), usage_error);
    CHECK(variance_population(acc) == 0.0);
}

TEST_CASE("merge equals the sequential run") {
    std::vector<double> left{1.0, 2.0};
    std::vector<double> right{3.0, 4.0};
    std::vector<double> all{1.0, 2.0, 3.0, 4.0};
    auto merged = welford_merge(welford_accumulate<double>(left), welford_accumulate<double>(right));
    auto direct = welford_accumulate<double>(all);
    CHECK(merged.n == direct.n);
    CHECK(test::ulps_between64(merged.mean, ExactRational::from_float(direct.mean)) <= 2.0);
    CHECK(test::ulps_between64(merged.m2, ExactRational::from_float(direct.m2)) <= 2.0);

    // merging with an empty accumulator is the identity
    auto with_empty = welford_merge(direct, OnlineStats<double>{});
    CHECK(with_empty.mean == direct.mean);
    CHECK(with_empty.m2 == direct.m2);
}

TEST_CASE("property: welford m2 never dips below zero") {
    SplitMix64 rng(113);
    for (int trial = 0; trial < 50; ++trial) {
        OnlineStats<float> acc;
        double shift = std::ldexp(1.0, static_cast<int>(rng.next_below(30)));
        for (int i = 0; i < 300; ++i)
            acc = welford_update(acc, static_cast<float>(shift + rng.next_double()));
        CHECK(acc.m2 >= 0.0f);
        CHECK(variance_sample(acc) >= 0.0f);
    }
}

TEST_CASE("property: merge is associative within tolerance") {
    SplitMix64 rng(127);
    std::vector<double> xs;
    for (int i = 0; i < 999; ++i) xs.push_back(1000.0 + rng.next_double());
    std::span<const double> s(xs);
    auto a = welford_accumulate<double>(s.first(300));
    auto b = welford_accumulate<double>(s.subspan(300, 400));
    auto c = welford_accumulate<double>(s.subspan(700));
    auto left = welford_merge(welford_merge(a, b), c);
    auto right = welford_merge(a, welford_merge(b, c));
    CHECK(test::ulps_between64(left.mean, ExactRational::from_float(right.mean)) <= 4.0);
    CHECK(test::ulps_between64(left.m2, ExactRational::from_float(right.m2)) <= 4.0);
}

TEST_CASE("property: shift robustness ladder against the oracle") {
    SplitMix64 rng(131);
    int welford_wins = 0, ladder_holds = 0;
    const int trials = 40;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> xs;
        for (int i = 0; i < 500; ++i) xs.push_back(1e9 + rng.next_double());
        ExactRational exact = exact_variance_sample(xs);

        double naive = variance_naive(xs, FormatSpec::binary32());
        // binary32 welford on binary32 data: feed the cast values
        OnlineStats<float> acc;
        for (double x : xs) acc = welford_update(acc, static_cast<float>(x));
        double welford = variance_sample(acc);
        double two_pass = variance_two_pass(xs, FormatSpec::binary32());

        double err_naive = exact.is_zero() ? 0.0 : test::rel_error(naive, exact);
        double err_welford = test::rel_error(welford, exact);
        double err_two_pass = test::rel_error(two_pass, exact);
        if (err_welford < err_naive) ++welford_wins;
        if (err_two_pass <= err_welford && err_welford <= err_naive) ++ladder_holds;
    }
    CHECK(welford_wins >= trials * 95 / 100);
    CHECK(ladder_holds > trials / 2); // the ladder holds in the median
}

TEST_CASE("covariance accumulator matches the oracle on a small set") {
    std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys{2.0, 4.0, 6.0, 8.0};
    OnlineCovariance<double> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) acc = covariance_update(acc, xs[i], ys[i]);
    // cov = 2 * var(xs) = 10/3
    ExactRational expected{BigInt(10), BigInt(3)};
    CHECK(test::ulps_between64(covariance_sample(acc), expected) <= 2.0);
}

TEST_SUITE_END();
