// SPDX-License-Identifier: Apache-2.0
#include "fpa/stochastic.hpp"

#include "fpa/eft.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fpa {
namespace stochastic {

namespace {

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

} // namespace

Policy policy_from_name(const std::string& name) {
    if (name == "random") return Policy::random_up_down();
    if (name == "nearest") return Policy::directed(RoundingMode::NearestEven);
    if (name == "up") return Policy::directed(RoundingMode::TowardPositive);
    if (name == "down") return Policy::directed(RoundingMode::TowardNegative);
    if (name == "zero") return Policy::directed(RoundingMode::TowardZero);
    if (name == "away") return Policy::directed(RoundingMode::AwayFromZero);
    if (name == "farthest") return Policy::directed(RoundingMode::FarthestFromExact);
    throw usage_error("unknown rounding policy: " + name);
}

double PerturbContext::perturb(double nearest, int tsign) {
    if (tsign == 0 || !std::isfinite(nearest)) return nearest;
    // The two faithful neighbors of the exact value.
    double upper = tsign > 0 ? next_up(nearest) : nearest;
    double lower = tsign > 0 ? nearest : next_down(nearest);

    RoundingMode mode = policy_.mode;
    if (policy_.kind == Policy::Kind::RandomUpDown)
        mode = stream_.next_coin() ? RoundingMode::TowardPositive : RoundingMode::TowardNegative;

    int value_sign = nearest != 0.0 ? sign_of(nearest) : tsign;
    switch (mode) {
    case RoundingMode::NearestEven:
        return nearest;
    case RoundingMode::TowardPositive:
        return upper;
    case RoundingMode::TowardNegative:
        return lower;
    case RoundingMode::TowardZero:
        return value_sign > 0 ? lower : upper;
    case RoundingMode::AwayFromZero:
        return value_sign > 0 ? upper : lower;
    case RoundingMode::FarthestFromExact:
        return tsign > 0 ? upper : lower; // the non-nearest faithful neighbor
    }
    return nearest;
}

double PerturbContext::add(double a, double b) {
    DoubleWord<double> s = two_sum(a, b);
    return perturb(s.hi, sign_of(s.lo));
}

double PerturbContext::sub(double a, double b) {
    DoubleWord<double> s = two_sum(a, -b);
    return perturb(s.hi, sign_of(s.lo));
}

double PerturbContext::mul(double a, double b) {
    DoubleWord<double> p = two_prod(a, b);
    if (p.lo == 0.0 && !residual_trustworthy(p.hi)) return p.hi; // direction unknowable
    return perturb(p.hi, sign_of(p.lo));
}

double PerturbContext::div(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q) || b == 0.0) return q;
    double r = std::fma(q, b, -a); // sign(exact - q) = -sign(r) * sign(b)
    if (r == 0.0) return q;
    if (!residual_trustworthy(q)) return q;
    return perturb(q, -sign_of(r) * sign_of(b));
}

double PerturbContext::sqrt(double x) {
    if (x < 0.0) return std::numeric_limits<double>::quiet_NaN();
    double r = std::sqrt(x);
    if (r == 0.0 || !std::isfinite(r)) return r;
    double res = std::fma(r, r, -x); // sign(exact - r) = -sign(res)
    if (res == 0.0) return r;
    return perturb(r, -sign_of(res));
}

double PerturbContext::binop(double a, double b, char op) {
    switch (op) {
    case '+': return add(a, b);
    case '-': return sub(a, b);
    case '*': return mul(a, b);
    case '/': return div(a, b);
    default: throw usage_error(std::string("unknown operator: ") + op);
    }
}

InstrumentedValue sqrt(const InstrumentedValue& x) {
    if (x.ctx_) return {x.ctx_->sqrt(x.v_), x.ctx_};
    return {std::sqrt(x.v_), nullptr};
}

double perturbed_binop(double a, double b, char op, Policy policy, SplitMix64& stream) {
    PerturbContext ctx(policy, stream);
    double out = ctx.binop(a, b, op);
    // Keep the caller's stream moving past any coin the context consumed.
    stream.next();
    return out;
}

StochasticReport run_stochastic(const Computation& computation, std::size_t n, std::uint64_t seed,
                                double digit_cap) {
    if (n < 2) throw usage_error("run_stochastic needs n >= 2");
    StochasticReport report;
    report.n_samples = n;
    report.seed = seed;
    report.results.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PerturbContext ctx(Policy::random_up_down(), substream(seed, i));
        double r = computation(ctx);
        report.results.push_back(r);
        if (!std::isfinite(r)) ++report.flagged;
    }

    std::size_t finite = 0;
    double mean = 0;
    for (double r : report.results) {
        if (!std::isfinite(r)) continue;
        ++finite;
        mean += (r - mean) / static_cast<double>(finite);
    }
    double m2 = 0;
    for (double r : report.results) {
        if (!std::isfinite(r)) continue;
        m2 += (r - mean) * (r - mean);
    }
    report.mean = mean;
    report.stddev = finite > 1 ? std::sqrt(m2 / static_cast<double>(finite - 1)) : 0.0;

    if (report.stddev == 0.0) {
        report.significant_digits = digit_cap;
    } else if (report.mean == 0.0) {
        report.significant_digits = 0.0;
    } else {
        double digits = -std::log10(report.stddev / std::fabs(report.mean));
        report.significant_digits = std::min(std::max(digits, 0.0), digit_cap);
    }
    return report;
}

std::vector<DirectedRun> run_directed_suite(const Computation& computation) {
    std::vector<DirectedRun> runs;
    for (RoundingMode mode : {RoundingMode::NearestEven, RoundingMode::TowardPositive,
                              RoundingMode::TowardNegative, RoundingMode::TowardZero,
                              RoundingMode::FarthestFromExact}) {
        PerturbContext ctx(Policy::directed(mode), SplitMix64(0));
        runs.push_back({mode, computation(ctx)});
    }
    return runs;
}

double directed_spread(const std::vector<DirectedRun>& runs) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const DirectedRun& r : runs) {
        if (!std::isfinite(r.result)) continue;
        lo = std::min(lo, r.result);
        hi = std::max(hi, r.result);
    }
    if (lo > hi) return std::numeric_limits<double>::quiet_NaN();
    return hi - lo;
}

} // namespace stochastic
} // namespace fpa
