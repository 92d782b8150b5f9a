// SPDX-License-Identifier: Apache-2.0
#include "fpa/rational.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace fpa {

std::string BigInt::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(value_, 10) + 2);
    mpz_get_str(buf.data(), 10, value_);
    return std::string(buf.data());
}

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den.sign() <= 0) throw usage_error("rational denominator must be positive");
    mpq_init(value_);
    mpz_set(mpq_numref(value_), num.raw());
    mpz_set(mpq_denref(value_), den.raw());
    mpq_canonicalize(value_);
}

ExactRational ExactRational::from_float(double x) {
    if (!std::isfinite(x)) throw usage_error("from_float requires a finite value");
    ExactRational r;
    mpq_set_d(r.value_, x); // exact: doubles are dyadic rationals
    return r;
}

ExactRational ExactRational::scaled(const BigInt& mag, int radix, long exp) {
    ExactRational r;
    mpz_set(mpq_numref(r.value_), mag.raw());
    if (exp >= 0) {
        mpz_t p;
        mpz_init(p);
        mpz_ui_pow_ui(p, static_cast<unsigned long>(radix), static_cast<unsigned long>(exp));
        mpz_mul(mpq_numref(r.value_), mpq_numref(r.value_), p);
        mpz_clear(p);
    } else {
        mpz_ui_pow_ui(mpq_denref(r.value_), static_cast<unsigned long>(radix),
                      static_cast<unsigned long>(-exp));
    }
    mpq_canonicalize(r.value_);
    return r;
}

std::string ExactRational::to_fraction_string() const {
    return numerator().to_string() + "/" + denominator().to_string();
}

ExactRational parse_decimal(const std::string& s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto fail = [&](const char* what) -> parse_error {
        return parse_error(std::string(what) + " in decimal literal \"" + s + "\"", i);
    };

    bool negative = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) negative = (s[i++] == '-');

    std::string digits;
    long frac_len = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (digits.empty()) throw fail("expected digits");
    if (i < n && s[i] == '.') {
        ++i;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        frac_len = static_cast<long>(i - start);
        if (frac_len == 0) throw fail("expected digits after decimal point");
    }
    long exponent = 0;
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (s[i] == '+' || s[i] == '-')) exp_neg = (s[i++] == '-');
        if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) throw fail("expected exponent digits");
        long e = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i++] - '0');
            if (e > 1000000) throw fail("exponent out of range");
        }
        exponent = exp_neg ? -e : e;
    }
    if (i != n) throw fail("unexpected trailing characters");

    BigInt mantissa = BigInt::from_string(digits);
    if (negative) mantissa = -mantissa;
    return ExactRational::scaled(mantissa, 10, exponent - frac_len);
}

std::pair<ExactRational, ExactRational> sqrt_enclosure(const ExactRational& q, unsigned bits) {
    int sgn = q.sign();
    if (sgn < 0) throw usage_error("sqrt_enclosure requires a nonnegative value");
    if (sgn == 0) return {ExactRational(0), ExactRational(0)};

    // sqrt(num/den) = sqrt(num*den)/den; scale by 4^k so the integer sqrt
    // carries k extra bits.
    BigInt num = q.numerator();
    BigInt den = q.denominator();
    BigInt scale = BigInt::pow(2, bits);
    BigInt radicand = num * den * (scale * scale);
    BigInt root = BigInt::isqrt(radicand); // root^2 <= radicand < (root+1)^2
    BigInt denom_scaled = den * scale;
    ExactRational lower(root, denom_scaled);
    ExactRational upper(root + BigInt(1), denom_scaled);
    return {lower, upper};
}

} // namespace fpa
