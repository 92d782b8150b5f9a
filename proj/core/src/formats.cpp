// SPDX-License-Identifier: Apache-2.0
#include "fpa/formats.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace fpa {

namespace {

constexpr int kMaxExponentMagnitude = 100000;

void pow_into(mpz_t out, int radix, unsigned long k) {
    if (radix == 2) {
        mpz_set_ui(out, 1);
        mpz_mul_2exp(out, out, k);
    } else {
        mpz_ui_pow_ui(out, static_cast<unsigned long>(radix), k);
    }
}

// Reusable mpz temporaries; the rounding kernel sits in the hot loop of the
// emulated-accumulator demos.
struct Scratch {
    mpz_t pw, n_scaled, d_scaled, digits, rem, twice;
    Scratch() { mpz_inits(pw, n_scaled, d_scaled, digits, rem, twice, nullptr); }
    ~Scratch() { mpz_clears(pw, n_scaled, d_scaled, digits, rem, twice, nullptr); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

// Compares num/den against radix^k.
int compare_with_power(const mpz_t num, const mpz_t den, int radix, long k) {
    Scratch& s = scratch();
    if (k >= 0) {
        pow_into(s.pw, radix, static_cast<unsigned long>(k));
        mpz_mul(s.pw, s.pw, den);
        return mpz_cmp(num, s.pw);
    }
    pow_into(s.pw, radix, static_cast<unsigned long>(-k));
    mpz_mul(s.pw, s.pw, num);
    return mpz_cmp(s.pw, den);
}

// Exponent of the leading digit: radix^e <= num/den < radix^(e+1).
long leading_exponent(const mpz_t num, const mpz_t den, int radix) {
    long guess;
    if (radix == 2) {
        guess = static_cast<long>(mpz_sizeinbase(num, 2)) - static_cast<long>(mpz_sizeinbase(den, 2));
    } else {
        guess = static_cast<long>(mpz_sizeinbase(num, 10)) - static_cast<long>(mpz_sizeinbase(den, 10));
    }
    while (compare_with_power(num, den, radix, guess) < 0) --guess;
    while (compare_with_power(num, den, radix, guess + 1) >= 0) ++guess;
    return guess;
}

// Magnitude rounding decision. cmp_half compares the discarded fraction
// against one half (only meaningful when inexact).
bool round_magnitude_up(RoundingMode mode, bool negative, int cmp_half, bool low_digit_odd) {
    switch (mode) {
    case RoundingMode::NearestEven:
        return cmp_half > 0 || (cmp_half == 0 && low_digit_odd);
    case RoundingMode::TowardZero:
        return false;
    case RoundingMode::AwayFromZero:
        return true;
    case RoundingMode::TowardPositive:
        return !negative;
    case RoundingMode::TowardNegative:
        return negative;
    case RoundingMode::FarthestFromExact:
        // The neighbor farther from the exact value; equidistant resolves
        // away from zero.
        return cmp_half <= 0;
    }
    return false;
}

ToyResult overflow_result(const FormatSpec& fmt, bool negative, RoundingMode mode) {
    ExceptionFlags flags;
    flags.inexact = true;
    flags.overflow = true;
    bool to_infinity = false;
    switch (mode) {
    case RoundingMode::NearestEven:
    case RoundingMode::AwayFromZero:
    case RoundingMode::FarthestFromExact:
        to_infinity = true;
        break;
    case RoundingMode::TowardZero:
        to_infinity = false;
        break;
    case RoundingMode::TowardPositive:
        to_infinity = !negative;
        break;
    case RoundingMode::TowardNegative:
        to_infinity = negative;
        break;
    }
    if (to_infinity) return {ToyFloat::infinity(fmt, negative), flags};
    std::uint64_t top = 1;
    for (int i = 0; i < fmt.precision_p; ++i) top *= static_cast<std::uint64_t>(fmt.radix);
    return {ToyFloat::finite(fmt, negative, top - 1, fmt.e_max), flags};
}

// Rounds the positive value num/den into fmt. The caller handles zero and
// the sign.
ToyResult round_positive(const mpz_t num, const mpz_t den, bool negative, const FormatSpec& fmt,
                         RoundingMode mode) {
    Scratch& s = scratch();
    const int p = fmt.precision_p;
    long e = leading_exponent(num, den, fmt.radix);

    // Far above the finite range no digits are needed.
    if (e > static_cast<long>(fmt.e_max) + 1) return overflow_result(fmt, negative, mode);

    ExceptionFlags flags;
    const bool tiny = e < fmt.e_min;

    if (tiny && !fmt.subnormals_enabled) {
        // Flush zone: the lattice below the smallest normal is {0}.
        // Round on the two-point grid {0, radix^e_min}.
        long k = fmt.e_min;
        if (k >= 0) {
            pow_into(s.pw, fmt.radix, static_cast<unsigned long>(k));
            mpz_mul(s.d_scaled, den, s.pw);
            mpz_set(s.n_scaled, num);
        } else {
            pow_into(s.pw, fmt.radix, static_cast<unsigned long>(-k));
            mpz_mul(s.n_scaled, num, s.pw);
            mpz_set(s.d_scaled, den);
        }
        mpz_mul_2exp(s.twice, s.n_scaled, 1);
        int cmp_half = mpz_cmp(s.twice, s.d_scaled);
        bool up = round_magnitude_up(mode, negative, cmp_half, /*low_digit_odd=*/false);
        flags.inexact = true;
        flags.underflow = true;
        if (!up) return {ToyFloat::zero(fmt, negative), flags};
        std::uint64_t lead = 1;
        for (int i = 0; i < p - 1; ++i) lead *= static_cast<std::uint64_t>(fmt.radix);
        return {ToyFloat::finite(fmt, negative, lead, fmt.e_min), flags};
    }

    long quantum = std::max(e, static_cast<long>(fmt.e_min)) - (p - 1);
    if (quantum >= 0) {
        pow_into(s.pw, fmt.radix, static_cast<unsigned long>(quantum));
        mpz_mul(s.d_scaled, den, s.pw);
        mpz_set(s.n_scaled, num);
    } else {
        pow_into(s.pw, fmt.radix, static_cast<unsigned long>(-quantum));
        mpz_mul(s.n_scaled, num, s.pw);
        mpz_set(s.d_scaled, den);
    }
    mpz_fdiv_qr(s.digits, s.rem, s.n_scaled, s.d_scaled);
    bool exact = mpz_sgn(s.rem) == 0;
    bool up = false;
    if (!exact) {
        mpz_mul_2exp(s.twice, s.rem, 1);
        int cmp_half = mpz_cmp(s.twice, s.d_scaled);
        up = round_magnitude_up(mode, negative, cmp_half, mpz_odd_p(s.digits) != 0);
        flags.inexact = true;
    }

    assert(mpz_sizeinbase(s.digits, 2) <= 64);
    std::uint64_t d = mpz_get_ui(s.digits);
    if (up) ++d;

    std::uint64_t full = 1, lead = 1;
    for (int i = 0; i < p; ++i) full *= static_cast<std::uint64_t>(fmt.radix);
    lead = full / static_cast<std::uint64_t>(fmt.radix);

    if (d == full) { // rounding crossed into the next binade
        d = lead;
        ++quantum;
    }
    flags.underflow = tiny && flags.inexact;
    if (d == 0) return {ToyFloat::zero(fmt, negative), flags};

    long exponent = quantum + (p - 1);
    if (d >= lead && exponent > fmt.e_max) {
        ToyResult r = overflow_result(fmt, negative, mode);
        return r;
    }
    return {ToyFloat::finite(fmt, negative, d, static_cast<int>(exponent)), flags};
}

ToyResult round_mpq(mpq_srcptr q, const FormatSpec& fmt, RoundingMode mode) {
    int sgn = mpq_sgn(q);
    if (sgn == 0) return {ToyFloat::zero(fmt, false), {}};
    if (sgn > 0) return round_positive(mpq_numref(q), mpq_denref(q), false, fmt, mode);
    thread_local mpz_t absnum;
    thread_local bool absnum_ready = false;
    if (!absnum_ready) {
        mpz_init(absnum);
        absnum_ready = true;
    }
    mpz_neg(absnum, mpq_numref(q));
    return round_positive(absnum, mpq_denref(q), true, fmt, mode);
}

// value = sign * mag * radix^scale, mag > 0.
ToyResult round_scaled_int(const mpz_t mag, long scale, bool negative, const FormatSpec& fmt,
                           RoundingMode mode) {
    thread_local mpz_t one, num;
    thread_local bool ready = false;
    if (!ready) {
        mpz_init_set_ui(one, 1);
        mpz_init(num);
        ready = true;
    }
    if (scale >= 0) {
        pow_into(num, fmt.radix, static_cast<unsigned long>(scale));
        mpz_mul(num, num, mag);
        return round_positive(num, one, negative, fmt, mode);
    }
    pow_into(num, fmt.radix, static_cast<unsigned long>(-scale));
    // num holds the denominator here.
    return round_positive(mag, num, negative, fmt, mode);
}

std::uint64_t pow_u64(int radix, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(radix);
    return r;
}

} // namespace

const char* to_string(RoundingMode mode) {
    switch (mode) {
    case RoundingMode::NearestEven: return "nearest-even";
    case RoundingMode::TowardPositive: return "toward-positive";
    case RoundingMode::TowardNegative: return "toward-negative";
    case RoundingMode::TowardZero: return "toward-zero";
    case RoundingMode::AwayFromZero: return "away-from-zero";
    case RoundingMode::FarthestFromExact: return "farthest-from-exact";
    }
    return "?";
}

void FormatSpec::validate() const {
    if (radix != 2 && radix != 10) throw usage_error("format radix must be 2 or 10");
    if (precision_p < 1) throw usage_error("format precision must be at least 1");
    int max_p = radix == 2 ? 63 : 19;
    if (precision_p > max_p)
        throw usage_error("format precision exceeds the 64-bit significand limit");
    if (e_min >= e_max) throw usage_error("format requires e_min < e_max");
    if (e_min < -kMaxExponentMagnitude || e_max > kMaxExponentMagnitude)
        throw usage_error("format exponent range too large");
}

ExactRational FormatSpec::min_normal() const { return ExactRational::scaled(BigInt(1), radix, e_min); }

ExactRational FormatSpec::min_subnormal() const {
    return ExactRational::scaled(BigInt(1), radix, static_cast<long>(e_min) - (precision_p - 1));
}

ExactRational FormatSpec::max_finite() const {
    BigInt full = BigInt::pow(static_cast<unsigned long>(radix), static_cast<unsigned long>(precision_p));
    return ExactRational::scaled(full - BigInt(1), radix, static_cast<long>(e_max) - (precision_p - 1));
}

ExactRational FormatSpec::epsilon() const {
    return ExactRational::scaled(BigInt(1), radix, 1L - precision_p);
}

double FormatSpec::decimal_digit_capacity() const {
    return precision_p * std::log10(static_cast<double>(radix));
}

FormatSpec FormatSpec::parse(const std::string& text) {
    if (text == "binary16") return binary16();
    if (text == "binary32") return binary32();
    if (text == "binary64") return binary64();
    if (text.rfind("toy:", 0) != 0) throw usage_error("unknown format: " + text);

    std::vector<std::string> fields;
    std::string body = text.substr(4);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(body.substr(pos));
            break;
        }
        fields.push_back(body.substr(pos, comma - pos));
        pos = comma + 1;
    }
    FormatSpec fmt;
    fmt.e_min = -99;
    fmt.e_max = 99;
    bool nosub = !fields.empty() && fields.back() == "nosub";
    std::size_t n = fields.size() - (nosub ? 1 : 0);
    if (n != 2 && n != 4) throw usage_error("format spec needs toy:<radix>,<p>[,<emin>,<emax>][,nosub]");
    try {
        fmt.radix = std::stoi(fields[0]);
        fmt.precision_p = std::stoi(fields[1]);
        if (n == 4) {
            fmt.e_min = std::stoi(fields[2]);
            fmt.e_max = std::stoi(fields[3]);
        }
    } catch (const std::exception&) {
        throw usage_error("malformed format spec: " + text);
    }
    fmt.subnormals_enabled = !nosub;
    fmt.validate();
    return fmt;
}

std::string FormatSpec::to_text() const {
    if (*this == binary16()) return "binary16";
    if (*this == binary32()) return "binary32";
    if (*this == binary64()) return "binary64";
    std::ostringstream os;
    os << "toy:" << radix << ',' << precision_p << ',' << e_min << ',' << e_max;
    if (!subnormals_enabled) os << ",nosub";
    return os.str();
}

ToyFloat ToyFloat::zero(const FormatSpec& fmt, bool negative) {
    return ToyFloat(fmt, Kind::Zero, negative, 0, 0);
}

ToyFloat ToyFloat::infinity(const FormatSpec& fmt, bool negative) {
    return ToyFloat(fmt, Kind::Infinity, negative, 0, 0);
}

ToyFloat ToyFloat::nan(const FormatSpec& fmt) { return ToyFloat(fmt, Kind::NaN, false, 0, 0); }

ToyFloat ToyFloat::finite(const FormatSpec& fmt, bool negative, std::uint64_t significand,
                          int exponent) {
    if (significand == 0) return zero(fmt, negative);
    std::uint64_t full = pow_u64(fmt.radix, fmt.precision_p);
    std::uint64_t lead = full / static_cast<std::uint64_t>(fmt.radix);
    if (significand >= full) throw usage_error("significand out of range for format");
    if (exponent < fmt.e_min || exponent > fmt.e_max) throw usage_error("exponent out of range for format");
    if (significand < lead) {
        if (exponent != fmt.e_min) throw usage_error("denormalized significand away from e_min");
        if (!fmt.subnormals_enabled) throw usage_error("subnormal value in a flush-to-zero format");
    }
    return ToyFloat(fmt, Kind::Finite, negative, significand, exponent);
}

bool ToyFloat::is_subnormal() const {
    if (kind_ != Kind::Finite) return false;
    std::uint64_t lead = pow_u64(format_.radix, format_.precision_p - 1);
    return significand_ < lead;
}

ExactRational ToyFloat::to_rational() const {
    switch (kind_) {
    case Kind::Zero:
        return ExactRational(0);
    case Kind::Finite: {
        BigInt mag(0);
        mpz_set_ui(mag.raw(), significand_);
        if (negative_) mag = -mag;
        return ExactRational::scaled(mag, format_.radix,
                                     static_cast<long>(exponent_) - (format_.precision_p - 1));
    }
    default:
        throw usage_error("to_rational requires a finite value");
    }
}

std::string ToyFloat::to_debug_string() const {
    switch (kind_) {
    case Kind::NaN: return "nan";
    case Kind::Infinity: return negative_ ? "-inf" : "+inf";
    case Kind::Zero: return negative_ ? "-0" : "0";
    case Kind::Finite: break;
    }
    std::string out = negative_ ? "-" : "";
    if (format_.radix == 10) {
        std::string digits = std::to_string(significand_);
        while (digits.size() < static_cast<std::size_t>(format_.precision_p))
            digits.insert(digits.begin(), '0');
        out += digits.substr(0, 1);
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(exponent_);
        return out;
    }
    out += std::to_string(significand_);
    out += "*2^" + std::to_string(exponent_ - (format_.precision_p - 1));
    return out;
}

ToyResult round_rational(const ExactRational& q, const FormatSpec& fmt, RoundingMode mode) {
    fmt.validate();
    return round_mpq(q.raw(), fmt, mode);
}

namespace {

ToyFloat negate(const ToyFloat& x) {
    switch (x.kind()) {
    case ToyFloat::Kind::NaN: return x;
    case ToyFloat::Kind::Zero: return ToyFloat::zero(x.format(), !x.negative());
    case ToyFloat::Kind::Infinity: return ToyFloat::infinity(x.format(), !x.negative());
    case ToyFloat::Kind::Finite:
        return ToyFloat::finite(x.format(), !x.negative(), x.significand(), x.exponent());
    }
    throw usage_error("unreachable");
}

void require_same_format(const ToyFloat& a, const ToyFloat& b) {
    if (!(a.format() == b.format())) throw usage_error("operands have mismatched formats");
}

ToyResult invalid_nan(const FormatSpec& fmt) {
    ExceptionFlags flags;
    flags.invalid = true;
    return {ToyFloat::nan(fmt), flags};
}

// Exact sum of two finite values as sign * mag * radix^scale.
struct ScaledInt {
    BigInt mag; // nonnegative
    long scale = 0;
    bool negative = false;
    bool zero = false;
};

ScaledInt exact_sum(const ToyFloat& a, const ToyFloat& b) {
    const FormatSpec& fmt = a.format();
    long qa = static_cast<long>(a.exponent()) - (fmt.precision_p - 1);
    long qb = static_cast<long>(b.exponent()) - (fmt.precision_p - 1);
    if (a.is_zero()) qa = qb;
    if (b.is_zero()) qb = qa;
    long qm = std::min(qa, qb);

    BigInt va(0), vb(0);
    mpz_set_ui(va.raw(), a.is_zero() ? 0 : a.significand());
    mpz_set_ui(vb.raw(), b.is_zero() ? 0 : b.significand());
    if (qa > qm) {
        BigInt shift = BigInt::pow(static_cast<unsigned long>(fmt.radix),
                                   static_cast<unsigned long>(qa - qm));
        va = va * shift;
    }
    if (qb > qm) {
        BigInt shift = BigInt::pow(static_cast<unsigned long>(fmt.radix),
                                   static_cast<unsigned long>(qb - qm));
        vb = vb * shift;
    }
    if (a.negative()) va = -va;
    if (b.negative()) vb = -vb;
    BigInt sum = va + vb;
    ScaledInt out;
    out.scale = qm;
    int sgn = sum.sign();
    if (sgn == 0) {
        out.zero = true;
        return out;
    }
    out.negative = sgn < 0;
    out.mag = sgn < 0 ? -sum : sum;
    return out;
}

} // namespace

ToyResult toy_add(const ToyFloat& a, const ToyFloat& b, RoundingMode mode) {
    require_same_format(a, b);
    const FormatSpec& fmt = a.format();
    if (a.is_nan() || b.is_nan()) return {ToyFloat::nan(fmt), {}};
    if (a.is_inf() && b.is_inf()) {
        if (a.negative() != b.negative()) return invalid_nan(fmt);
        return {a, {}};
    }
    if (a.is_inf()) return {a, {}};
    if (b.is_inf()) return {b, {}};

    ScaledInt sum = exact_sum(a, b);
    if (sum.zero) {
        // IEEE 754 zero-sum sign rule: like-signed zeros keep their sign,
        // every other exact cancellation is +0 except under toward-negative.
        bool neg;
        if (a.is_zero() && b.is_zero() && a.negative() == b.negative())
            neg = a.negative();
        else
            neg = mode == RoundingMode::TowardNegative;
        return {ToyFloat::zero(fmt, neg), {}};
    }
    return round_scaled_int(sum.mag.raw(), sum.scale, sum.negative, fmt, mode);
}

ToyResult toy_sub(const ToyFloat& a, const ToyFloat& b, RoundingMode mode) {
    return toy_add(a, negate(b), mode);
}

ToyResult toy_mul(const ToyFloat& a, const ToyFloat& b, RoundingMode mode) {
    require_same_format(a, b);
    const FormatSpec& fmt = a.format();
    if (a.is_nan() || b.is_nan()) return {ToyFloat::nan(fmt), {}};
    bool neg = a.negative() != b.negative();
    if (a.is_inf() || b.is_inf()) {
        if (a.is_zero() || b.is_zero()) return invalid_nan(fmt);
        return {ToyFloat::infinity(fmt, neg), {}};
    }
    if (a.is_zero() || b.is_zero()) return {ToyFloat::zero(fmt, neg), {}};

    BigInt ma(0), mb(0);
    mpz_set_ui(ma.raw(), a.significand());
    mpz_set_ui(mb.raw(), b.significand());
    BigInt prod = ma * mb;
    long scale = static_cast<long>(a.exponent()) + b.exponent() - 2L * (fmt.precision_p - 1);
    return round_scaled_int(prod.raw(), scale, neg, fmt, mode);
}

ToyResult toy_div(const ToyFloat& a, const ToyFloat& b, RoundingMode mode) {
    require_same_format(a, b);
    const FormatSpec& fmt = a.format();
    if (a.is_nan() || b.is_nan()) return {ToyFloat::nan(fmt), {}};
    bool neg = a.negative() != b.negative();
    if (a.is_inf()) {
        if (b.is_inf()) return invalid_nan(fmt);
        return {ToyFloat::infinity(fmt, neg), {}};
    }
    if (b.is_inf()) return {ToyFloat::zero(fmt, neg), {}};
    if (b.is_zero()) {
        if (a.is_zero()) return invalid_nan(fmt);
        ExceptionFlags flags;
        flags.divide_by_zero = true;
        return {ToyFloat::infinity(fmt, neg), flags};
    }
    if (a.is_zero()) return {ToyFloat::zero(fmt, neg), {}};

    // a/b = (da/db) * radix^(qa-qb)
    long scale = static_cast<long>(a.exponent()) - b.exponent();
    thread_local mpz_t num, den;
    thread_local bool ready = false;
    if (!ready) {
        mpz_inits(num, den, nullptr);
        ready = true;
    }
    mpz_set_ui(num, a.significand());
    mpz_set_ui(den, b.significand());
    if (scale >= 0) {
        mpz_t pw;
        mpz_init(pw);
        pow_into(pw, fmt.radix, static_cast<unsigned long>(scale));
        mpz_mul(num, num, pw);
        mpz_clear(pw);
    } else {
        mpz_t pw;
        mpz_init(pw);
        pow_into(pw, fmt.radix, static_cast<unsigned long>(-scale));
        mpz_mul(den, den, pw);
        mpz_clear(pw);
    }
    return round_positive(num, den, neg, fmt, mode);
}

ExactRational ulp(const ToyFloat& x) {
    if (!x.is_finite()) throw usage_error("ulp requires a finite value");
    const FormatSpec& fmt = x.format();
    long e = x.is_zero() ? fmt.e_min : x.exponent();
    if (x.is_zero() && !fmt.subnormals_enabled)
        return ExactRational::scaled(BigInt(1), fmt.radix, fmt.e_min);
    return ExactRational::scaled(BigInt(1), fmt.radix, e - (fmt.precision_p - 1));
}

ToyFloat successor(const ToyFloat& x) {
    if (!x.is_finite()) throw usage_error("successor requires a finite value");
    const FormatSpec& fmt = x.format();
    std::uint64_t full = pow_u64(fmt.radix, fmt.precision_p);
    std::uint64_t lead = full / static_cast<std::uint64_t>(fmt.radix);

    if (x.is_zero())
        return ToyFloat::finite(fmt, false, fmt.subnormals_enabled ? 1 : lead, fmt.e_min);
    if (!x.negative()) {
        std::uint64_t d = x.significand() + 1;
        int e = x.exponent();
        if (d == full) {
            d = lead;
            ++e;
            if (e > fmt.e_max) return ToyFloat::infinity(fmt, false);
        }
        return ToyFloat::finite(fmt, false, d, e);
    }
    // Negative: step the magnitude down.
    std::uint64_t d = x.significand() - 1;
    int e = x.exponent();
    if (d == 0) return ToyFloat::zero(fmt, true);
    if (d < lead && e > fmt.e_min) {
        d = full - 1;
        --e;
    } else if (d < lead && e == fmt.e_min && !fmt.subnormals_enabled) {
        return ToyFloat::zero(fmt, true);
    }
    return ToyFloat::finite(fmt, true, d, e);
}

ToyFloat predecessor(const ToyFloat& x) { return negate(successor(negate(x))); }

bool is_correct_rounding(const ExactRational& q, const ToyFloat& x) {
    if (!x.is_finite()) throw usage_error("is_correct_rounding requires a finite value");
    ToyResult nearest = round_rational(q, x.format(), RoundingMode::NearestEven);
    return toy_equal(nearest.value, x);
}

bool is_faithful_rounding(const ExactRational& q, const ToyFloat& x) {
    if (!x.is_finite()) throw usage_error("is_faithful_rounding requires a finite value");
    ToyResult down = round_rational(q, x.format(), RoundingMode::TowardNegative);
    ToyResult up = round_rational(q, x.format(), RoundingMode::TowardPositive);
    return toy_equal(down.value, x) || toy_equal(up.value, x);
}

DoubleRoundResult double_round(const ExactRational& q, const FormatSpec& fmt_high,
                               const FormatSpec& fmt_low, RoundingMode mode) {
    fmt_high.validate();
    fmt_low.validate();
    if (fmt_high.radix != fmt_low.radix) throw usage_error("double_round requires matching radices");
    if (fmt_low.precision_p >= fmt_high.precision_p)
        throw usage_error("double_round requires fmt_low strictly less precise than fmt_high");

    ToyResult high = round_rational(q, fmt_high, mode);
    ToyFloat chained = high.value.is_finite()
                           ? round_rational(high.value.to_rational(), fmt_low, mode).value
                           : ToyFloat::infinity(fmt_low, high.value.negative());
    ToyFloat direct = round_rational(q, fmt_low, mode).value;
    return {chained, direct, !toy_equal(chained, direct)};
}

bool toy_equal(const ToyFloat& a, const ToyFloat& b) {
    if (a.is_nan() || b.is_nan()) return false;
    if (a.is_inf() || b.is_inf())
        return a.is_inf() && b.is_inf() && a.negative() == b.negative();
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_zero() || b.is_zero()) return false;
    return a.negative() == b.negative() && a.significand() == b.significand() &&
           a.exponent() == b.exponent() && a.format() == b.format();
}

bool toy_less(const ToyFloat& a, const ToyFloat& b) {
    if (a.is_nan() || b.is_nan()) return false;
    auto rank = [](const ToyFloat& x) { return x.is_inf() ? (x.negative() ? -1 : 1) : 0; };
    int ra = rank(a), rb = rank(b);
    if (ra != 0 || rb != 0) return ra < rb;
    return a.to_rational() < b.to_rational();
}

ToyFloat toy_from_double(double x, const FormatSpec& fmt) {
    if (std::isnan(x)) return ToyFloat::nan(fmt);
    if (std::isinf(x)) return ToyFloat::infinity(fmt, x < 0);
    if (x == 0.0) return ToyFloat::zero(fmt, std::signbit(x));
    return round_rational(ExactRational::from_float(x), fmt, RoundingMode::NearestEven).value;
}

double toy_to_double(const ToyFloat& x) {
    switch (x.kind()) {
    case ToyFloat::Kind::NaN:
        return std::numeric_limits<double>::quiet_NaN();
    case ToyFloat::Kind::Infinity:
        return x.negative() ? -std::numeric_limits<double>::infinity()
                            : std::numeric_limits<double>::infinity();
    case ToyFloat::Kind::Zero:
        return x.negative() ? -0.0 : 0.0;
    case ToyFloat::Kind::Finite:
        break;
    }
    ExactRational v = x.to_rational();
    double d = to_nearest_double(v);
    if (!(ExactRational::from_float(d) == v)) throw usage_error("value does not fit a double exactly");
    return d;
}

double to_nearest_double(const ExactRational& q) {
    ToyResult r = round_rational(q, FormatSpec::binary64(), RoundingMode::NearestEven);
    switch (r.value.kind()) {
    case ToyFloat::Kind::Zero:
        return r.value.negative() ? -0.0 : 0.0;
    case ToyFloat::Kind::Infinity:
        return r.value.negative() ? -std::numeric_limits<double>::infinity()
                                  : std::numeric_limits<double>::infinity();
    case ToyFloat::Kind::Finite: {
        double mag = std::ldexp(static_cast<double>(r.value.significand()),
                                r.value.exponent() - (FormatSpec::binary64().precision_p - 1));
        return r.value.negative() ? -mag : mag;
    }
    default:
        throw usage_error("unexpected nan from rounding");
    }
}

float to_nearest_float(const ExactRational& q) {
    ToyResult r = round_rational(q, FormatSpec::binary32(), RoundingMode::NearestEven);
    switch (r.value.kind()) {
    case ToyFloat::Kind::Zero:
        return r.value.negative() ? -0.0f : 0.0f;
    case ToyFloat::Kind::Infinity:
        return r.value.negative() ? -std::numeric_limits<float>::infinity()
                                  : std::numeric_limits<float>::infinity();
    case ToyFloat::Kind::Finite: {
        double mag = std::ldexp(static_cast<double>(r.value.significand()),
                                r.value.exponent() - (FormatSpec::binary32().precision_p - 1));
        return static_cast<float>(r.value.negative() ? -mag : mag);
    }
    default:
        throw usage_error("unexpected nan from rounding");
    }
}

ExactRational ulp_at(const ExactRational& q, const FormatSpec& fmt) {
    fmt.validate();
    if (q.is_zero())
        return ExactRational::scaled(BigInt(1), fmt.radix,
                                     static_cast<long>(fmt.e_min) - (fmt.precision_p - 1));
    ExactRational a = q.abs();
    long e = leading_exponent(mpq_numref(a.raw()), mpq_denref(a.raw()), fmt.radix);
    long clamped = std::max(e, static_cast<long>(fmt.e_min));
    return ExactRational::scaled(BigInt(1), fmt.radix, clamped - (fmt.precision_p - 1));
}

} // namespace fpa
