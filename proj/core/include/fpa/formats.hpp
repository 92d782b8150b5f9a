// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/rational.hpp"

#include <cstdint>
#include <string>

namespace fpa {

enum class RoundingMode {
    NearestEven,
    TowardPositive,
    TowardNegative,
    TowardZero,
    AwayFromZero,
    FarthestFromExact, // the non-nearest faithful neighbor; exact values unchanged
};

const char* to_string(RoundingMode mode);

struct ExceptionFlags {
    bool inexact = false;
    bool underflow = false;
    bool overflow = false;
    bool invalid = false;
    bool divide_by_zero = false;

    bool any() const { return inexact || underflow || overflow || invalid || divide_by_zero; }
    ExceptionFlags operator|(const ExceptionFlags& o) const {
        return {inexact || o.inexact, underflow || o.underflow, overflow || o.overflow,
                invalid || o.invalid, divide_by_zero || o.divide_by_zero};
    }
};

// A finite floating-point format F(radix, p, [e_min, e_max]).
// `precision_p` counts significand digits including the leading one;
// exponents refer to the leading digit, so the finite normal values are
// d * radix^(e-p+1) with radix^(p-1) <= d < radix^p and e in [e_min, e_max].
//
// Significands are stored in 64 bits, which caps p at 63 binary or 19
// decimal digits; enough for every hardware format plus the desk-scale toy
// formats this library simulates.
struct FormatSpec {
    int radix = 2;     // 2 or 10
    int precision_p = 53;
    int e_min = -1022;
    int e_max = 1023;
    bool subnormals_enabled = true;

    void validate() const;

    bool operator==(const FormatSpec&) const = default;

    ExactRational min_normal() const;    // radix^e_min
    ExactRational min_subnormal() const; // radix^(e_min-p+1)
    ExactRational max_finite() const;    // (radix^p - 1) * radix^(e_max-p+1)
    ExactRational epsilon() const;       // radix^(1-p)

    // Largest count of base-10 digits faithfully carried by the format,
    // log10(radix^p); the significant-digit cap used by diagnostics.
    double decimal_digit_capacity() const;

    static FormatSpec binary16() { return {2, 11, -14, 15, true}; }
    static FormatSpec binary32() { return {2, 24, -126, 127, true}; }
    static FormatSpec binary64() { return {2, 53, -1022, 1023, true}; }

    // `toy:<radix>,<p>[,<emin>,<emax>][,nosub]` or a named alias
    // (binary16/binary32/binary64). Omitted exponent range defaults to +-99.
    static FormatSpec parse(const std::string& text);
    std::string to_text() const;
};

// One simulated value. Finite payload is (negative, significand, exponent)
// with the normalization invariant from FormatSpec; subnormals carry
// exponent == e_min and significand < radix^(p-1).
class ToyFloat {
public:
    enum class Kind { Finite, Zero, Infinity, NaN };

    static ToyFloat zero(const FormatSpec& fmt, bool negative = false);
    static ToyFloat infinity(const FormatSpec& fmt, bool negative);
    static ToyFloat nan(const FormatSpec& fmt);
    static ToyFloat finite(const FormatSpec& fmt, bool negative, std::uint64_t significand,
                           int exponent);

    const FormatSpec& format() const { return format_; }
    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite || kind_ == Kind::Zero; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_inf() const { return kind_ == Kind::Infinity; }
    bool is_nan() const { return kind_ == Kind::NaN; }
    bool is_subnormal() const;
    bool negative() const { return negative_; }
    std::uint64_t significand() const { return significand_; }
    int exponent() const { return exponent_; }

    ExactRational to_rational() const; // finite values only

    // Digit string such as "3.34e0" (significand with radix point after the
    // leading digit, exponent of the leading digit).
    std::string to_debug_string() const;

private:
    ToyFloat(const FormatSpec& fmt, Kind kind, bool negative, std::uint64_t significand,
             int exponent)
        : format_(fmt), kind_(kind), negative_(negative), significand_(significand),
          exponent_(exponent) {}

    FormatSpec format_;
    Kind kind_;
    bool negative_;
    std::uint64_t significand_;
    int exponent_;
};

struct ToyResult {
    ToyFloat value;
    ExceptionFlags flags;
};

// Correct rounding of an exact rational into the format. Total over finite
// rationals: overflow yields +-infinity with the overflow flag, values below
// the normal range round gradually (or flush when subnormals are disabled)
// with the underflow flag set when tiny and inexact.
ToyResult round_rational(const ExactRational& q, const FormatSpec& fmt, RoundingMode mode);

// IEEE-style arithmetic: exact rational op, then one rounding.
// Operands must share a format.
ToyResult toy_add(const ToyFloat& a, const ToyFloat& b, RoundingMode mode = RoundingMode::NearestEven);
ToyResult toy_sub(const ToyFloat& a, const ToyFloat& b, RoundingMode mode = RoundingMode::NearestEven);
ToyResult toy_mul(const ToyFloat& a, const ToyFloat& b, RoundingMode mode = RoundingMode::NearestEven);
ToyResult toy_div(const ToyFloat& a, const ToyFloat& b, RoundingMode mode = RoundingMode::NearestEven);

// Lattice geometry. ulp(x) is the spacing at |x| going up,
// radix^(max(e, e_min) - p + 1); successor/predecessor step one lattice
// value, crossing zero, the subnormal range and the finite boundary.
ExactRational ulp(const ToyFloat& x);
ToyFloat successor(const ToyFloat& x);
ToyFloat predecessor(const ToyFloat& x);

bool is_correct_rounding(const ExactRational& q, const ToyFloat& x);
bool is_faithful_rounding(const ExactRational& q, const ToyFloat& x);

struct DoubleRoundResult {
    ToyFloat chained; // round(round(q, high), low)
    ToyFloat direct;  // round(q, low)
    bool differs;
};

// fmt_low must be strictly less precise than fmt_high, same radix.
DoubleRoundResult double_round(const ExactRational& q, const FormatSpec& fmt_high,
                               const FormatSpec& fmt_low, RoundingMode mode = RoundingMode::NearestEven);

// Numeric comparisons with IEEE semantics: nan compares false, zeros equal.
bool toy_equal(const ToyFloat& a, const ToyFloat& b);
bool toy_less(const ToyFloat& a, const ToyFloat& b);

// Rounds a native double into fmt in a single step (exact whenever the
// value is representable; binary64 targets are always exact).
ToyFloat toy_from_double(double x, const FormatSpec& fmt = FormatSpec::binary64());
double toy_to_double(const ToyFloat& x); // requires the value to fit a double exactly

// Correctly rounded native conversions via the rational kernel.
double to_nearest_double(const ExactRational& q);
float to_nearest_float(const ExactRational& q);

// ulp of `fmt` at the magnitude of q (q != 0): radix^(max(e_q, e_min)-p+1).
// This is the yardstick used by every error-in-ulps report.
ExactRational ulp_at(const ExactRational& q, const FormatSpec& fmt);

} // namespace fpa
