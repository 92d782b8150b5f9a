// SPDX-License-Identifier: Apache-2.0
#include "fpa/roundtrip.hpp"

#include "fpa/rng.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fpa {

namespace {

enum class DecimalDirection { Nearest, Down, Up };

struct DecimalDigits {
    BigInt digits;  // d significant digits, [10^(d-1), 10^d)
    long exp10 = 0; // exponent of the leading digit
    bool exact = false;
};

// Rounds |v| (v != 0) onto the grid of d-significant-digit decimals.
DecimalDigits decimal_round(const ExactRational& v, int d, DecimalDirection dir) {
    ExactRational a = v.abs();
    BigInt num = a.numerator();
    BigInt den = a.denominator();

    // exponent of the leading decimal digit
    long e = static_cast<long>(num.size_in_base(10)) - static_cast<long>(den.size_in_base(10));
    auto cmp_pow10 = [&](long k) {
        ExactRational p = ExactRational::scaled(BigInt(1), 10, k);
        return rat_compare(a, p);
    };
    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;

    long scale = (d - 1) - e; // a * 10^scale has d digits before the point
    BigInt n_scaled = num, d_scaled = den;
    if (scale >= 0)
        n_scaled = num * BigInt::pow(10, static_cast<unsigned long>(scale));
    else
        d_scaled = den * BigInt::pow(10, static_cast<unsigned long>(-scale));

    auto [q, r] = BigInt::divmod(n_scaled, d_scaled);
    DecimalDigits out;
    out.exp10 = e;
    out.exact = r.is_zero();
    bool up = false;
    if (!out.exact) {
        switch (dir) {
        case DecimalDirection::Down:
            up = false;
            break;
        case DecimalDirection::Up:
            up = true;
            break;
        case DecimalDirection::Nearest: {
            BigInt twice = r + r;
            auto c = twice <=> d_scaled;
            up = c > 0 || (c == 0 && q.is_odd());
            break;
        }
        }
    }
    out.digits = up ? q + BigInt(1) : q;
    BigInt full = BigInt::pow(10, static_cast<unsigned long>(d));
    if (out.digits == full) {
        out.digits = BigInt::pow(10, static_cast<unsigned long>(d - 1));
        out.exp10 += 1;
    }
    return out;
}

ExactRational decimal_value(const DecimalDigits& dd, int d, bool negative) {
    BigInt mag = negative ? -dd.digits : dd.digits;
    return ExactRational::scaled(mag, 10, dd.exp10 - (d - 1));
}

// Renders digits*10^(exp10-d+1); positional form in a human range,
// scientific outside it. Both forms re-parse exactly.
std::string format_decimal(const DecimalDigits& dd, int d, bool negative) {
    std::string sig = dd.digits.to_string();
    assert(static_cast<int>(sig.size()) == d);
    while (sig.size() > 1 && sig.back() == '0') sig.pop_back();
    long e = dd.exp10;
    std::string out = negative ? "-" : "";

    if (e >= -5 && e <= 20) {
        if (e >= 0) {
            if (static_cast<long>(sig.size()) <= e + 1) {
                out += sig;
                out.append(static_cast<std::size_t>(e + 1 - static_cast<long>(sig.size())), '0');
            } else {
                out += sig.substr(0, static_cast<std::size_t>(e + 1));
                out += ".";
                out += sig.substr(static_cast<std::size_t>(e + 1));
            }
        } else {
            out += "0.";
            out.append(static_cast<std::size_t>(-e - 1), '0');
            out += sig;
        }
        return out;
    }
    out += sig.substr(0, 1);
    if (sig.size() > 1) {
        out += ".";
        out += sig.substr(1);
    }
    out += "e";
    out += std::to_string(e);
    return out;
}

} // namespace

std::string exact_decimal_string(const ExactRational& value) {
    if (value.is_zero()) return "0";
    BigInt num = value.numerator();
    bool negative = num.sign() < 0;
    if (negative) num = -num;
    BigInt den = value.denominator();

    // den must be 2^a * 5^b for the expansion to terminate.
    mpz_t rest;
    mpz_init_set(rest, den.raw());
    unsigned long a = static_cast<unsigned long>(mpz_scan1(rest, 0));
    mpz_fdiv_q_2exp(rest, rest, a);
    mpz_t five;
    mpz_init_set_ui(five, 5);
    mpz_t reduced;
    mpz_init(reduced);
    unsigned long b = static_cast<unsigned long>(mpz_remove(reduced, rest, five));
    bool ok = mpz_cmp_ui(reduced, 1) == 0;
    mpz_clears(rest, five, reduced, nullptr);
    if (!ok) throw usage_error("value has no finite decimal expansion");

    unsigned long m = std::max(a, b);
    BigInt scaled = num * BigInt::pow(2, m - a) * BigInt::pow(5, m - b);
    std::string digits = scaled.to_string();
    std::string out = negative ? "-" : "";
    if (m == 0) return out + digits;
    if (digits.size() <= m) {
        out += "0.";
        out.append(m - digits.size(), '0');
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - m);
        out += ".";
        out += digits.substr(digits.size() - m);
    }
    return out;
}

std::string exact_decimal_string(double x) {
    if (x == 0.0) return std::signbit(x) ? "-0" : "0";
    return exact_decimal_string(ExactRational::from_float(x));
}

std::string rounded_decimal_string(const ExactRational& value, int digits) {
    if (digits < 1) throw usage_error("rounded_decimal_string needs at least one digit");
    if (value.is_zero()) return "0";
    DecimalDigits dd = decimal_round(value, digits, DecimalDirection::Nearest);
    return format_decimal(dd, digits, value.sign() < 0);
}

namespace {

std::string shortest_impl(const ExactRational& x, bool negative, const FormatSpec& fmt) {
    // x is the exact absolute value of a finite nonzero member of fmt.
    const int d_max =
        static_cast<int>(std::ceil(fmt.precision_p * std::log10(static_cast<double>(fmt.radix)))) + 3;
    for (int d = 1; d <= d_max; ++d) {
        for (DecimalDirection dir :
             {DecimalDirection::Nearest, DecimalDirection::Down, DecimalDirection::Up}) {
            DecimalDigits cand = decimal_round(x, d, dir);
            ExactRational vc = decimal_value(cand, d, false);
            ToyResult back = round_rational(vc, fmt, RoundingMode::NearestEven);
            if (back.value.is_finite() && !back.value.is_zero() && back.value.to_rational() == x)
                return format_decimal(cand, d, negative);
            if (cand.exact) break; // directed candidates coincide with the nearest one
        }
    }
    throw std::logic_error("shortest_roundtrip_decimal: no candidate found");
}

} // namespace

std::string shortest_roundtrip_decimal(const ExactRational& x, const FormatSpec& fmt) {
    fmt.validate();
    if (x.is_zero()) return "0";
    ToyResult self = round_rational(x, fmt, RoundingMode::NearestEven);
    if (!(self.value.is_finite() && !self.flags.inexact))
        throw usage_error("shortest_roundtrip_decimal requires a value representable in fmt");
    return shortest_impl(x.abs(), x.sign() < 0, fmt);
}

std::string shortest_roundtrip_decimal(double x) {
    if (!std::isfinite(x)) throw usage_error("shortest_roundtrip_decimal requires a finite value");
    if (x == 0.0) return std::signbit(x) ? "-0" : "0";
    return shortest_impl(ExactRational::from_float(std::fabs(x)), std::signbit(x),
                         FormatSpec::binary64());
}

std::string shortest_roundtrip_decimal(float x) {
    if (!std::isfinite(x)) throw usage_error("shortest_roundtrip_decimal requires a finite value");
    if (x == 0.0f) return std::signbit(x) ? "-0" : "0";
    return shortest_impl(ExactRational::from_float(std::fabs(x)), std::signbit(x),
                         FormatSpec::binary32());
}

std::string shortest_roundtrip_decimal(const ToyFloat& x) {
    switch (x.kind()) {
    case ToyFloat::Kind::NaN: return "nan";
    case ToyFloat::Kind::Infinity: return x.negative() ? "-inf" : "inf";
    case ToyFloat::Kind::Zero: return x.negative() ? "-0" : "0";
    case ToyFloat::Kind::Finite: break;
    }
    ExactRational v = x.to_rational();
    return shortest_impl(v.abs(), x.negative(), x.format());
}

bool decimal_roundtrips(const std::string& literal, int digits, const FormatSpec& fmt) {
    ExactRational q = parse_decimal(literal);
    if (q.is_zero()) return true;
    ToyResult r = round_rational(q, fmt, RoundingMode::NearestEven);
    if (!r.value.is_finite() || r.value.is_zero()) return false;
    ExactRational rv = r.value.to_rational().abs();
    DecimalDigits printed = decimal_round(rv, digits, DecimalDirection::Nearest);
    return decimal_value(printed, digits, q.sign() < 0) == q;
}

namespace {

struct FailureProbe {
    const FormatSpec& fmt;
    int digits;
    ExactRational lo; // smallest normal
    ExactRational hi; // largest finite
    BigInt sig_lo;    // 10^(digits-1)
    BigInt sig_hi;    // 10^digits - 1

    // A candidate is the decimal sig * 10^(exp10 - digits + 1).
    std::optional<std::string> check(const BigInt& sig, long exp10) const {
        if (sig < sig_lo || sig_hi < sig) return std::nullopt;
        DecimalDigits dd;
        dd.digits = sig;
        dd.exp10 = exp10;
        ExactRational v = decimal_value(dd, digits, false);
        if (v < lo || hi < v) return std::nullopt;
        ToyResult r = round_rational(v, fmt, RoundingMode::NearestEven);
        if (!r.value.is_finite() || r.value.is_zero()) return std::nullopt;
        DecimalDigits back = decimal_round(r.value.to_rational().abs(), digits,
                                           DecimalDirection::Nearest);
        if (decimal_value(back, digits, false) == v) return std::nullopt;
        return format_decimal(dd, digits, false);
    }
};

} // namespace

std::optional<std::string> find_roundtrip_failure(const FormatSpec& fmt, int digits,
                                                  const RoundtripSearchOptions& options) {
    fmt.validate();
    if (digits < 1) throw usage_error("find_roundtrip_failure needs at least one digit");

    FailureProbe probe{fmt, digits, fmt.min_normal(), fmt.max_finite(),
                       BigInt::pow(10, static_cast<unsigned long>(digits - 1)),
                       BigInt::pow(10, static_cast<unsigned long>(digits)) - BigInt(1)};

    // Failures live where the format's lattice is coarser than the decimal
    // grid; that only happens near the top of a decade that a binade start
    // cuts into, so window the boundaries first.
    auto window_around = [&](const ExactRational& anchor) -> std::optional<std::string> {
        if (anchor < probe.lo || probe.hi < anchor) return std::nullopt;
        DecimalDigits base = decimal_round(anchor, digits, DecimalDirection::Down);
        for (std::uint64_t off = 0; off <= options.boundary_window; ++off) {
            for (int sign : {1, -1}) {
                if (off == 0 && sign < 0) continue;
                BigInt delta(static_cast<long>(off));
                BigInt sig = sign > 0 ? base.digits + delta : base.digits - delta;
                if (auto hit = probe.check(sig, base.exp10)) return hit;
            }
        }
        return std::nullopt;
    };

    for (int e2 = fmt.e_min + 1; e2 <= fmt.e_max; ++e2) {
        ExactRational boundary = ExactRational::scaled(BigInt(1), fmt.radix, e2);
        if (auto hit = window_around(boundary)) return hit;
    }
    // Decade tops inside the finite range.
    {
        double lo_log = (fmt.e_min) * std::log10(static_cast<double>(fmt.radix));
        double hi_log = (fmt.e_max + 1) * std::log10(static_cast<double>(fmt.radix));
        for (long e10 = static_cast<long>(std::floor(lo_log)); e10 <= static_cast<long>(std::ceil(hi_log));
             ++e10) {
            ExactRational decade = ExactRational::scaled(BigInt(1), 10, e10);
            if (auto hit = window_around(decade)) return hit;
        }
    }

    if (options.exhaustive) {
        // Sweep every significand in the decades whose decimal spacing is
        // finer than the format spacing somewhere.
        double lo_log = fmt.e_min * std::log10(static_cast<double>(fmt.radix));
        double hi_log = (fmt.e_max + 1) * std::log10(static_cast<double>(fmt.radix));
        for (long e10 = static_cast<long>(std::floor(lo_log)); e10 <= static_cast<long>(std::ceil(hi_log));
             ++e10) {
            ExactRational spacing = ExactRational::scaled(BigInt(1), 10, e10 - digits + 1);
            ExactRational top = ExactRational::scaled(BigInt(1), 10, e10 + 1);
            if (probe.hi < top) continue;
            ExactRational top_ulp = ulp_at(top, fmt);
            if (!(spacing < top_ulp)) continue;
            BigInt s = probe.sig_lo;
            while (!(probe.sig_hi < s)) {
                if (auto hit = probe.check(s, e10)) return hit;
                s = s + BigInt(1);
            }
        }
    }

    // Randomized phase over the whole normal range.
    SplitMix64 rng(options.seed);
    double lo_log = fmt.e_min * std::log10(static_cast<double>(fmt.radix));
    double hi_log = fmt.e_max * std::log10(static_cast<double>(fmt.radix));
    long e_lo = static_cast<long>(std::ceil(lo_log));
    long e_hi = static_cast<long>(std::floor(hi_log));
    if (e_hi < e_lo) e_hi = e_lo;
    std::uint64_t sig_span = 9;
    for (int i = 1; i < digits; ++i) sig_span *= 10;
    std::uint64_t sig_base = sig_span / 9;
    for (std::uint64_t i = 0; i < options.budget; ++i) {
        std::uint64_t s = sig_base + rng.next_below(sig_span);
        long e10 = e_lo + static_cast<long>(rng.next_below(static_cast<std::uint64_t>(e_hi - e_lo + 1)));
        BigInt sig(0);
        mpz_set_ui(sig.raw(), s);
        if (auto hit = probe.check(sig, e10)) return hit;
    }
    return std::nullopt;
}

} // namespace fpa
