// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace fpa {

// SplitMix64. Used everywhere a reproducible stream is needed; the C++
// standard library distributions are not bit-stable across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, 1) with 24 random bits, exactly representable in binary32.
    float next_float() { return static_cast<float>(next() >> 40) * 0x1.0p-24f; }

    bool next_coin() { return (next() & 1u) != 0; }

    // Uniform integer in [0, bound); bound > 0. Modulo bias is irrelevant at
    // the bounds used here (all far below 2^32).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Derives an independent substream for (seed, index) pairs, so samples are
// order-independent and may be evaluated concurrently.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    mixer.next();
    return mixer;
}

} // namespace fpa
