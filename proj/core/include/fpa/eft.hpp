// SPDX-License-Identifier: Apache-2.0
#pragma once

#ifdef __FAST_MATH__
#error fast math is enabled; it would silently break every error-free transformation here
#endif

#include <cassert>
#include <cmath>
#include <concepts>

namespace fpa {

// Unevaluated sum hi + lo with hi = fl(hi + lo).
template <std::floating_point T>
struct DoubleWord {
    T hi;
    T lo;
};

// hi + lo := a + b, branch-free 6-operation algorithm (Knuth / Moller).
template <std::floating_point T>
inline DoubleWord<T> two_sum(T a, T b) {
    T s = a + b;
    T ap = s - b;
    T bp = s - ap;
    T da = a - ap;
    T db = b - bp;
    return {s, da + db};
}

// 3-operation variant, requires |a| >= |b|.
template <std::floating_point T>
inline DoubleWord<T> fast_two_sum(T a, T b) {
    assert(!(std::fabs(a) < std::fabs(b)));
    T s = a + b;
    T z = s - a;
    return {s, b - z};
}

namespace detail {

// A wrong fma (emulated by separate rounding) would silently void the
// two_prod contract, so probe it once: the residual of (2^27+1)^2 is
// representable and must come out exactly 1.
inline bool fma_residual_is_exact() {
    const double a = 134217729.0; // 2^27 + 1
    const double hi = a * a;      // rounds to 2^54 + 2^28
    return std::fma(a, a, -hi) == 1.0;
}

inline bool fma_usable() {
    static const bool ok = fma_residual_is_exact();
    return ok;
}

// Dekker splitting fallback for hosts without a correct fma.
template <std::floating_point T>
inline DoubleWord<T> split(T a) {
    constexpr int half_bits = std::numeric_limits<T>::digits / 2 + 1;
    const T factor = static_cast<T>((1ULL << half_bits) + 1);
    T c = factor * a;
    T high = c - (c - a);
    return {high, a - high};
}

template <std::floating_point T>
inline DoubleWord<T> two_prod_split(T a, T b) {
    T p = a * b;
    DoubleWord<T> as = split(a);
    DoubleWord<T> bs = split(b);
    T err = ((as.hi * bs.hi - p) + as.hi * bs.lo + as.lo * bs.hi) + as.lo * bs.lo;
    return {p, err};
}

} // namespace detail

// hi + lo := a * b. Exact provided the product stays clear of overflow and
// the residual of the subnormal floor.
template <std::floating_point T>
inline DoubleWord<T> two_prod(T a, T b) {
    if (detail::fma_usable()) {
        T p = a * b;
        return {p, std::fma(a, b, -p)};
    }
    return detail::two_prod_split(a, b);
}

// Residuals below this magnitude may themselves have underflowed, so
// "residual == 0" stops being a proof of exactness (binary64).
inline constexpr double kResidualTrustFloor = 0x1.0p-900;

// True when a zero residual genuinely proves the operation exact.
inline bool residual_trustworthy(double hi) {
    return hi == 0.0 || std::fabs(hi) >= kResidualTrustFloor;
}

} // namespace fpa
