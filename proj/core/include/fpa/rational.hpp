// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpa {

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation-level failure on valid-looking input (non-triangle sides,
// probe without curvature, ...): CLI exit code 1 rather than 2.
class diagnostic_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Thin value-semantic wrapper over mpz_t; only what the oracle needs.
class BigInt {
public:
    BigInt() { mpz_init(value_); }
    BigInt(long v) { mpz_init_set_si(value_, v); } // NOLINT(google-explicit-constructor)
    BigInt(const BigInt& other) { mpz_init_set(value_, other.value_); }
    BigInt(BigInt&& other) noexcept {
        mpz_init(value_);
        mpz_swap(value_, other.value_);
    }
    BigInt& operator=(const BigInt& other) {
        if (this != &other) mpz_set(value_, other.value_);
        return *this;
    }
    BigInt& operator=(BigInt&& other) noexcept {
        mpz_swap(value_, other.value_);
        return *this;
    }
    ~BigInt() { mpz_clear(value_); }

    static BigInt pow(unsigned long base, unsigned long exp) {
        BigInt r;
        mpz_ui_pow_ui(r.value_, base, exp);
        return r;
    }
    static BigInt from_string(const std::string& digits) {
        BigInt r;
        if (mpz_set_str(r.value_, digits.c_str(), 10) != 0)
            throw parse_error("not a decimal integer: " + digits, 0);
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.value_, a.value_, b.value_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.value_, a.value_, b.value_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.value_, a.value_, b.value_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.value_, value_);
        return r;
    }

    // Floor division with remainder, denominator > 0.
    static std::pair<BigInt, BigInt> divmod(const BigInt& num, const BigInt& den) {
        std::pair<BigInt, BigInt> qr;
        mpz_fdiv_qr(qr.first.value_, qr.second.value_, num.value_, den.value_);
        return qr;
    }

    // Truncated integer square root.
    static BigInt isqrt(const BigInt& v) {
        BigInt r;
        mpz_sqrt(r.value_, v.value_);
        return r;
    }

    int sign() const { return mpz_sgn(value_); }
    bool is_zero() const { return mpz_sgn(value_) == 0; }
    bool is_odd() const { return mpz_odd_p(value_) != 0; }
    std::size_t size_in_base(int base) const { return mpz_sizeinbase(value_, base); }
    bool fits_u64() const { return mpz_sizeinbase(value_, 2) <= 63; }
    std::uint64_t to_u64() const { return mpz_get_ui(value_); }
    double to_double_approx() const { return mpz_get_d(value_); }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = mpz_cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.value_, b.value_) == 0; }

    std::string to_string() const;

    mpz_srcptr raw() const { return value_; }
    mpz_ptr raw() { return value_; }

private:
    mpz_t value_;
};

// Arbitrary-precision rational, always reduced, denominator > 0.
// This is the ground-truth type: every accuracy statement in the library is
// ultimately a comparison between a float and one of these.
class ExactRational {
public:
    ExactRational() { mpq_init(value_); }
    ExactRational(long v) { // NOLINT(google-explicit-constructor)
        mpq_init(value_);
        mpq_set_si(value_, v, 1);
    }
    ExactRational(const BigInt& num, const BigInt& den);
    ExactRational(const ExactRational& other) {
        mpq_init(value_);
        mpq_set(value_, other.value_);
    }
    ExactRational(ExactRational&& other) noexcept {
        mpq_init(value_);
        mpq_swap(value_, other.value_);
    }
    ExactRational& operator=(const ExactRational& other) {
        if (this != &other) mpq_set(value_, other.value_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& other) noexcept {
        mpq_swap(value_, other.value_);
        return *this;
    }
    ~ExactRational() { mpq_clear(value_); }

    // Exact value of a finite native float; throws usage_error on inf/nan.
    static ExactRational from_float(double x);
    static ExactRational from_float(float x) { return from_float(static_cast<double>(x)); }

    // value = mag * radix^exp, radix in {2, 10}; exp may be negative.
    static ExactRational scaled(const BigInt& mag, int radix, long exp);

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_add(r.value_, a.value_, b.value_);
        return r;
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_sub(r.value_, a.value_, b.value_);
        return r;
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_mul(r.value_, a.value_, b.value_);
        return r;
    }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
        if (mpq_sgn(b.value_) == 0) throw usage_error("rational division by zero");
        ExactRational r;
        mpq_div(r.value_, a.value_, b.value_);
        return r;
    }
    ExactRational operator-() const {
        ExactRational r;
        mpq_neg(r.value_, value_);
        return r;
    }
    ExactRational abs() const {
        ExactRational r;
        mpq_abs(r.value_, value_);
        return r;
    }

    ExactRational& operator+=(const ExactRational& b) {
        mpq_add(value_, value_, b.value_);
        return *this;
    }
    ExactRational& operator-=(const ExactRational& b) {
        mpq_sub(value_, value_, b.value_);
        return *this;
    }
    ExactRational& operator*=(const ExactRational& b) {
        mpq_mul(value_, value_, b.value_);
        return *this;
    }

    int sign() const { return mpq_sgn(value_); }
    bool is_zero() const { return mpq_sgn(value_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(value_), 1) == 0; }

    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = mpq_cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.value_, b.value_) != 0;
    }

    BigInt numerator() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(value_));
        return n;
    }
    BigInt denominator() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(value_));
        return d;
    }

    // "num/den" form, e.g. "1/2", "-3/1".
    std::string to_fraction_string() const;

    // Nearest double; exact when the value is representable. Display use only.
    double to_double_approx() const { return mpq_get_d(value_); }

    mpq_srcptr raw() const { return value_; }
    mpq_ptr raw() { return value_; }

private:
    mpq_t value_;
};

inline ExactRational rat_add(const ExactRational& a, const ExactRational& b) { return a + b; }
inline ExactRational rat_sub(const ExactRational& a, const ExactRational& b) { return a - b; }
inline ExactRational rat_mul(const ExactRational& a, const ExactRational& b) { return a * b; }
inline ExactRational rat_div(const ExactRational& a, const ExactRational& b) { return a / b; }
inline int rat_compare(const ExactRational& a, const ExactRational& b) {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// Parses `[-+]?digits[.digits][(e|E)[-+]?digits]` to the exact value of the
// literal. Throws parse_error with the offending position.
ExactRational parse_decimal(const std::string& literal);

// Enclosure of sqrt(q): lower^2 <= q <= upper^2 with
// upper - lower <= sqrt(q) * 2^-bits (q > 0). q = 0 gives [0, 0].
std::pair<ExactRational, ExactRational> sqrt_enclosure(const ExactRational& q, unsigned bits);

} // namespace fpa
