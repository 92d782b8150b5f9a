// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/formats.hpp"
#include "fpa/rational.hpp"
#include "fpa/rng.hpp"

#include <cmath>

namespace fpa::test {

// |computed - exact| / |exact| as a double, via the oracle.
inline double rel_error(double computed, const ExactRational& exact) {
    if (exact.is_zero()) return computed == 0.0 ? 0.0 : HUGE_VAL;
    ExactRational err = (ExactRational::from_float(computed) - exact).abs();
    return to_nearest_double(err / exact.abs());
}

inline double rel_error(float computed, const ExactRational& exact) {
    return rel_error(static_cast<double>(computed), exact);
}

// |computed - exact| in ulps of fmt at the exact value's magnitude.
inline double ulps_between(double computed, const ExactRational& exact, const FormatSpec& fmt) {
    ExactRational err = (ExactRational::from_float(computed) - exact).abs();
    return to_nearest_double(err / ulp_at(exact, fmt));
}

inline double ulps_between64(double computed, const ExactRational& exact) {
    return ulps_between(computed, exact, FormatSpec::binary64());
}

inline double ulps_between32(float computed, const ExactRational& exact) {
    return ulps_between(static_cast<double>(computed), exact, FormatSpec::binary32());
}

// Uniform double with magnitude 2^[e_lo, e_hi); never zero.
inline double random_double(SplitMix64& rng, int e_lo, int e_hi) {
    double mant = 1.0 + rng.next_double();
    int e = e_lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(e_hi - e_lo)));
    double v = std::ldexp(mant, e);
    return rng.next_coin() ? v : -v;
}

} // namespace fpa::test
