// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures. An optional argument runs a
// single criterion by number.

#include "fpa/condition.hpp"
#include "fpa/eft.hpp"
#include "fpa/formats.hpp"
#include "fpa/interval.hpp"
#include "fpa/polynomial.hpp"
#include "fpa/rational.hpp"
#include "fpa/rng.hpp"
#include "fpa/roundtrip.hpp"
#include "fpa/stable.hpp"
#include "fpa/stats.hpp"
#include "fpa/stochastic.hpp"
#include "fpa/summation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace fpa;

namespace {

struct Check {
    int number;
    const char* title;
    std::function<bool(std::string&)> run;
};

double rel_error(double computed, const ExactRational& exact) {
    ExactRational err = (ExactRational::from_float(computed) - exact).abs();
    return to_nearest_double(err / exact.abs());
}

double ulps(double computed, const ExactRational& exact, const FormatSpec& fmt) {
    ExactRational err = (ExactRational::from_float(computed) - exact).abs();
    return to_nearest_double(err / ulp_at(exact, fmt));
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

// --- 1. toy-decimal cancellation ------------------------------------------

bool criterion_1(std::string& detail) {
    FormatSpec dec3{10, 3, -20, 20, true};
    ToyFloat a = round_rational(parse_decimal("3.34"), dec3, RoundingMode::NearestEven).value;
    ToyFloat b = round_rational(parse_decimal("3.33"), dec3, RoundingMode::NearestEven).value;
    ToyFloat naive = stable::diff_squares_naive(a, b).value;
    ToyFloat factored = stable::diff_squares_factored(a, b).value;

    ExactRational exact = parse_decimal("0.0667");
    bool values_ok = naive.to_rational() == parse_decimal("0.1") && factored.to_rational() == exact;

    ExactRational err = (naive.to_rational() - exact).abs();
    ExactRational err_ulps = err / ulp_at(exact, dec3);
    ExactRational rel = err / exact;
    bool errors_ok = err_ulps == ExactRational(333) &&
                     (rel - ExactRational(BigInt(1), BigInt(2))).abs() <
                         ExactRational(BigInt(1), BigInt(1000));
    detail = "naive=0.1 factored=0.0667 err=333 ulps, rel~50%";
    return values_ok && errors_ok;
}

// --- 2. double rounding -----------------------------------------------------

bool criterion_2(std::string& detail) {
    FormatSpec dec2{10, 2, -20, 20, true};
    FormatSpec dec1{10, 1, -20, 20, true};
    DoubleRoundResult dr = double_round(parse_decimal("3.47"), dec2, dec1);
    bool example_ok = dr.chained.to_rational() == ExactRational(4) &&
                      dr.direct.to_rational() == ExactRational(3) && dr.differs;

    SplitMix64 rng(20250808);
    std::size_t sweep = 100000, faithful = 0;
    for (std::size_t i = 0; i < sweep; ++i) {
        long num = static_cast<long>(rng.next_below(2000000)) - 1000000;
        if (num == 0) num = 1;
        long den = static_cast<long>(rng.next_below(999983)) + 1;
        long exp = static_cast<long>(rng.next_below(21)) - 10;
        ExactRational q = ExactRational{BigInt(num), BigInt(den)} *
                          ExactRational::scaled(BigInt(1), 10, exp);
        DoubleRoundResult r = double_round(q, dec2, dec1);
        if (r.chained.is_finite() && is_faithful_rounding(q, r.chained)) ++faithful;
    }
    detail = "3.47: chained=4 direct=3; faithful " + std::to_string(faithful) + "/" +
             std::to_string(sweep);
    return example_ok && faithful == sweep;
}

// --- 3. fp16 saturation -----------------------------------------------------

bool criterion_3(std::string& detail) {
    std::vector<double> ones(4000000, 1.0);
    double total = summation::sum_naive(std::span<const double>(ones), FormatSpec::binary16());
    double rel = rel_error(total, ExactRational(4000000));
    detail = "sum=" + std::to_string(total) + " rel_err=" + std::to_string(rel);
    return total == 2048.0 && rel >= 0.999;
}

// --- 4. binary32 sum accuracy ----------------------------------------------

bool criterion_4(std::string& detail) {
    const int seeds = 21;
    std::vector<double> err_naive, err_neumaier, err_pairwise;
    for (int s = 0; s < seeds; ++s) {
        SplitMix64 rng(1000 + s);
        std::vector<float> xs;
        xs.reserve(1000000);
        for (int i = 0; i < 1000000; ++i) xs.push_back(rng.next_float());
        ExactRational exact = summation::exact_sum<float>(xs);
        err_naive.push_back(rel_error(summation::sum_naive<float>(xs), exact));
        err_neumaier.push_back(rel_error(summation::sum_neumaier<float>(xs), exact));
        err_pairwise.push_back(rel_error(summation::sum_pairwise<float>(xs), exact));
    }
    double med_naive = median(err_naive);
    double med_neumaier = median(err_neumaier);
    double med_pairwise = median(err_pairwise);
    char buf[160];
    std::snprintf(buf, sizeof buf, "medians: naive=%.3g neumaier=%.3g pairwise=%.3g", med_naive,
                  med_neumaier, med_pairwise);
    detail = buf;
    return med_naive >= 1e-6 && med_naive <= 1e-3 && med_neumaier <= 1e-7 &&
           med_pairwise < med_naive;
}

// --- 5. robust quadratic ----------------------------------------------------

struct QuadOracle {
    ExactRational x1, x2;
};

QuadOracle quad_oracle(double a, double b, double c) {
    ExactRational ra = ExactRational::from_float(a), rb = ExactRational::from_float(b),
                  rc = ExactRational::from_float(c);
    ExactRational disc = rb * rb - ExactRational(4) * ra * rc;
    auto [sq, sq_hi] = sqrt_enclosure(disc, 200);
    ExactRational two_a = ExactRational(2) * ra;
    ExactRational x1 = (-rb - sq) / two_a;
    ExactRational x2 = (-rb + sq) / two_a;
    if (x2 < x1) std::swap(x1, x2);
    return {x1, x2};
}

bool criterion_5(std::string& detail) {
    const FormatSpec fmt = FormatSpec::binary64();
    QuadOracle anchor = quad_oracle(1.0, 1e8, 1.0);
    stable::QuadraticRoots robust = stable::quadratic_robust(1.0, 1e8, 1.0);
    stable::QuadraticRoots naive = stable::quadratic_naive(1.0, 1e8, 1.0);
    bool anchor_ok = ulps(robust.x2, anchor.x2, fmt) <= 1.0 &&
                     rel_error(naive.x2, anchor.x2) > 0.1; // zero correct digits

    SplitMix64 rng(20250805);
    std::size_t tested = 0, within = 0;
    while (tested < 10000) {
        double a = std::ldexp(1.0 + rng.next_double(), static_cast<int>(rng.next_below(40)) - 20);
        double b = std::ldexp(1.0 + rng.next_double(), static_cast<int>(rng.next_below(67)) - 33);
        double c = std::ldexp(1.0 + rng.next_double(), static_cast<int>(rng.next_below(40)) - 20);
        if (rng.next_coin()) a = -a;
        if (rng.next_coin()) b = -b;
        if (rng.next_coin()) c = -c;
        ExactRational disc = ExactRational::from_float(b) * ExactRational::from_float(b) -
                             ExactRational(4) * ExactRational::from_float(a) *
                                 ExactRational::from_float(c);
        if (!(ExactRational(0) < disc)) continue;
        stable::QuadraticRoots r = stable::quadratic_robust(a, b, c);
        if (r.kind != stable::QuadraticRoots::Kind::TwoReal) continue;
        ++tested;
        QuadOracle oracle = quad_oracle(a, b, c);
        if (ulps(r.x1, oracle.x1, fmt) <= 2.0 && ulps(r.x2, oracle.x2, fmt) <= 2.0) ++within;
    }
    detail = "anchor ok; property " + std::to_string(within) + "/" + std::to_string(tested) +
             " within 2 ulps";
    return anchor_ok && within == tested;
}

// --- 6. EFT exactness -------------------------------------------------------

bool criterion_6(std::string& detail) {
    SplitMix64 rng(606060);
    auto random_in = [&](int lo, int hi) {
        double v = std::ldexp(1.0 + rng.next_double(),
                              lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi - lo))));
        return rng.next_coin() ? -v : v;
    };
    std::size_t failures = 0;
    const std::size_t n = 1000000;
    for (std::size_t i = 0; i < n; ++i) {
        double a = random_in(-300, 300);
        double b = random_in(-300, 300);
        DoubleWord<double> s = two_sum(a, b);
        if (!(ExactRational::from_float(s.hi) + ExactRational::from_float(s.lo) ==
              ExactRational::from_float(a) + ExactRational::from_float(b)))
            ++failures;
        double pa = random_in(-200, 200);
        double pb = random_in(-200, 200);
        DoubleWord<double> p = two_prod(pa, pb);
        if (!(ExactRational::from_float(p.hi) + ExactRational::from_float(p.lo) ==
              ExactRational::from_float(pa) * ExactRational::from_float(pb)))
            ++failures;
    }
    detail = std::to_string(2 * n) + " cases, " + std::to_string(failures) + " failures";
    return failures == 0;
}

// --- 7. Kahan triangle ------------------------------------------------------

bool criterion_7(std::string& detail) {
    const FormatSpec fmt = FormatSpec::binary64();
    // Feasible needle triples (edge ratio 1e5 .. 3.4e8), validity checked
    // exactly below.
    const double family[][3] = {
        {100000.0, 99999.99979, 0.00029},
        {1e6, 999999.9979, 0.0029},
        {1e7, 9999999.979, 0.029},
        {1e7, 9999999.9999979, 0.0000029},
        {1e9, 999999997.9, 2.9},
    };
    double worst_kahan = 0.0, best_heron = HUGE_VAL;
    for (const auto& sides : family) {
        stable::TriangleSides t = stable::TriangleSides::sorted(sides[0], sides[1], sides[2]);
        if (!t.valid()) return false;
        ExactRational a = ExactRational::from_float(t.a), b = ExactRational::from_float(t.b),
                      c = ExactRational::from_float(t.c);
        ExactRational p = (a + b + c) / ExactRational(2);
        auto [area, area_hi] = sqrt_enclosure(p * (p - a) * (p - b) * (p - c), 200);
        worst_kahan = std::max(worst_kahan, ulps(stable::area_kahan(t), area, fmt));
        best_heron = std::min(best_heron, ulps(stable::heron_naive(t), area, fmt));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "kahan worst %.2f ulps; heron best %.3g ulps", worst_kahan,
                  best_heron);
    detail = buf;
    return worst_kahan <= 2.0 && best_heron > 1000.0;
}

// --- 8. variance ------------------------------------------------------------

bool criterion_8(std::string& detail) {
    std::vector<double> xs{1e9 + 1.0, 1e9 + 2.0, 1e9 + 3.0, 1e9 + 4.0};
    ExactRational five_thirds{BigInt(5), BigInt(3)};

    double naive = stats::variance_naive(xs, FormatSpec::binary32());
    bool naive_wrecked = naive <= 0.0 || rel_error(naive, five_thirds) > 1.0;
    double welford = stats::variance_sample(stats::welford_accumulate<double>(xs));
    double two_pass = stats::variance_two_pass(xs, FormatSpec::binary64());
    double two_pass32 = stats::variance_two_pass(xs, FormatSpec::binary32());
    char buf[160];
    std::snprintf(buf, sizeof buf, "naive=%.3g welford_rel=%.3g twopass_rel=%.3g (b32 %.3g)",
                  naive, rel_error(welford, five_thirds), rel_error(two_pass, five_thirds),
                  rel_error(two_pass32, five_thirds));
    detail = buf;
    return naive_wrecked && rel_error(welford, five_thirds) <= 1e-3 &&
           rel_error(two_pass, five_thirds) <= 1e-6;
}

// --- 9. round-trip digits ---------------------------------------------------

bool criterion_9(std::string& detail) {
    RoundtripSearchOptions opts;
    opts.budget = 100000;
    auto failure32 = find_roundtrip_failure(FormatSpec::binary32(), 7, opts);
    bool found = failure32.has_value() &&
                 !decimal_roundtrips(*failure32, 7, FormatSpec::binary32());
    bool none_b32_6 = !find_roundtrip_failure(FormatSpec::binary32(), 6, opts).has_value();
    bool none_b64_15 = !find_roundtrip_failure(FormatSpec::binary64(), 15, opts).has_value();

    ExactRational sum = ExactRational::from_float(0.1) + ExactRational::from_float(0.2);
    bool identity_broken = !(sum == ExactRational::from_float(0.3)) &&
                           rat_compare(sum, parse_decimal("0.3")) > 0;
    bool decimals_ok = shortest_roundtrip_decimal(0.1 + 0.2) == "0.30000000000000004" &&
                       shortest_roundtrip_decimal(0.3) == "0.3";
    detail = "counterexample " + (failure32 ? *failure32 : std::string("-")) +
             "; 6/15-digit searches clean; 0.1+0.2 != 0.3";
    return found && none_b32_6 && none_b64_15 && identity_broken && decimals_ok;
}

// --- 10. stochastic diagnosis ----------------------------------------------

bool criterion_10(std::string& detail) {
    using stochastic::InstrumentedValue;
    stochastic::Computation rump = [](stochastic::PerturbContext& ctx) {
        return stable::rump_eval(InstrumentedValue(77617.0, &ctx), InstrumentedValue(33096.0, &ctx))
            .value();
    };
    stochastic::Computation exact_product = [](stochastic::PerturbContext& ctx) {
        return (InstrumentedValue(2.0, &ctx) * InstrumentedValue(3.0, &ctx)).value();
    };

    stochastic::StochasticReport rump_report = stochastic::run_stochastic(rump, 64, 42);
    stochastic::StochasticReport exact_report = stochastic::run_stochastic(exact_product, 64, 42);
    const double cap = 15.954589770191003;

    auto runs = stochastic::run_directed_suite(rump);
    double nearest = 0;
    for (const auto& r : runs)
        if (r.mode == RoundingMode::NearestEven) nearest = r.result;
    double spread = stochastic::directed_spread(runs);

    stochastic::StochasticReport again = stochastic::run_stochastic(rump, 64, 42);
    bool reproducible = rump_report.results == again.results;

    char buf[160];
    std::snprintf(buf, sizeof buf, "digits(rump)=%.2f digits(2*3)=%.2f spread=%.3g |nearest|=%.3g",
                  rump_report.significant_digits, exact_report.significant_digits, spread,
                  std::fabs(nearest));
    detail = buf;
    return rump_report.significant_digits <= 1.0 && exact_report.significant_digits == cap &&
           spread > std::fabs(nearest) && reproducible;
}

// --- 11. interval soundness --------------------------------------------------

bool criterion_11(std::string& detail) {
    SplitMix64 rng(111111);
    auto random_val = [&](int lo, int hi) {
        double v = std::ldexp(1.0 + rng.next_double(),
                              lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi - lo))));
        return rng.next_coin() ? -v : v;
    };
    const std::size_t trials = 100000;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        double alo = random_val(-12, 12);
        double ahi = alo + std::fabs(random_val(-16, -4));
        double blo = random_val(-12, 12);
        double bhi = blo + std::fabs(random_val(-16, -4));
        interval::Interval a = interval::make_interval(alo, ahi);
        interval::Interval b = interval::make_interval(blo, bhi);
        double x = rng.next_coin() ? alo : ahi;
        double y = rng.next_coin() ? blo : bhi;
        ExactRational rx = ExactRational::from_float(x), ry = ExactRational::from_float(y);
        if (!interval::iv_contains(interval::iv_add(a, b), rx + ry)) ++violations;
        if (!interval::iv_contains(interval::iv_sub(a, b), rx - ry)) ++violations;
        if (!interval::iv_contains(interval::iv_mul(a, b), rx * ry)) ++violations;
        if (!(blo <= 0.0 && 0.0 <= bhi)) {
            if (!interval::iv_contains(interval::iv_div(a, b), rx / ry)) ++violations;
        }
    }

    bool exact_tight = interval::iv_width(interval::iv_add(interval::point(2.0),
                                                           interval::point(3.0))) == 0.0 &&
                       interval::iv_width(interval::iv_mul(interval::point(1.5),
                                                           interval::point(2.0))) == 0.0;

    interval::DemonDemo demo = interval::iv_demon_demo(64);
    bool demon_ok = demo.exact_eft_widths.back() == 0.0 &&
                    demo.exact_inflation_widths.back() > 0.0 &&
                    demo.exact_inflation_widths.back() > demo.exact_inflation_widths.front();

    detail = std::to_string(trials) + " trials/op, " + std::to_string(violations) +
             " violations; exact widths 0; demon demo ok";
    return violations == 0 && exact_tight && demon_ok;
}

// --- 12. minimization resolution ---------------------------------------------

bool criterion_12(std::string& detail) {
    auto parabola = [](double x) { return 1.0 + (x - 1.0) * (x - 1.0); };
    condition::ProbeResult p64 =
        condition::min_resolution_probe(parabola, 1.0, FormatSpec::binary64());
    condition::ProbeResult p32 =
        condition::min_resolution_probe(parabola, 1.0, FormatSpec::binary32());
    auto within_10x = [](const condition::ProbeResult& p) {
        return p.plateau_half_width > p.sqrt_eps / 10.0 && p.plateau_half_width < p.sqrt_eps * 10.0;
    };
    char buf[160];
    std::snprintf(buf, sizeof buf, "half-width b64=%.3g (sqrt_eps %.3g), b32=%.3g (sqrt_eps %.3g)",
                  p64.plateau_half_width, p64.sqrt_eps, p32.plateau_half_width, p32.sqrt_eps);
    detail = buf;
    return within_10x(p64) && within_10x(p32) &&
           p32.plateau_half_width > p64.plateau_half_width;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Check> checks = {
        {1, "toy-decimal cancellation (333 ulps, 50%)", criterion_1},
        {2, "double rounding (3.47 -> 4 vs 3; chained stays faithful)", criterion_2},
        {3, "fp16 saturation at 2048", criterion_3},
        {4, "binary32 summation ladder over 21 seeds", criterion_4},
        {5, "robust quadratic roots vs oracle", criterion_5},
        {6, "EFT exactness over 2e6 cases", criterion_6},
        {7, "needle triangles: kahan <= 2 ulps, heron adrift", criterion_7},
        {8, "shifted variance: naive wrecked, welford/two-pass fine", criterion_8},
        {9, "round-trip digit limits and 0.1+0.2", criterion_9},
        {10, "stochastic diagnosis of rump vs exact product", criterion_10},
        {11, "interval soundness, tightness and the demon", criterion_11},
        {12, "minimization plateau at sqrt(eps)", criterion_12},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const Check& check : checks) {
        if (only != 0 && check.number != only) continue;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s [%s] (%.2fs)\n", ok ? "PASS" : "FAIL", check.number,
                    check.title, detail.c_str(), secs);
        if (!ok) ++failures;
    }
    return failures;
}
