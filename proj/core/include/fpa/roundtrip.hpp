// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/formats.hpp"
#include "fpa/rational.hpp"

#include <optional>
#include <string>

namespace fpa {

// Full exact decimal expansion of a value with a 2^a*5^b denominator
// (every binary or decimal float qualifies). Re-parsing the result with
// parse_decimal reproduces the value exactly.
std::string exact_decimal_string(const ExactRational& value);
std::string exact_decimal_string(double x);

// The decimal literal with the fewest significant digits that rounds back
// (to nearest) to exactly `x` in `fmt`; among candidates of that length the
// one nearest the value, ties to even last digit.
std::string shortest_roundtrip_decimal(const ExactRational& x, const FormatSpec& fmt);
std::string shortest_roundtrip_decimal(double x);
std::string shortest_roundtrip_decimal(float x);
std::string shortest_roundtrip_decimal(const ToyFloat& x);

// Correctly rounded decimal string of an arbitrary rational with `digits`
// significant digits (display helper for non-terminating ground truth).
std::string rounded_decimal_string(const ExactRational& value, int digits);

struct RoundtripSearchOptions {
    std::uint64_t budget = 200000;   // probes for the randomized phase
    std::uint64_t seed = 1;
    bool exhaustive = false;         // sweep every significand in the hot zones
    std::uint64_t boundary_window = 512; // probes on each side of each binade boundary
};

// Searches for a `digits`-significant-digit decimal literal in the normal
// range of `fmt` that does not survive the decimal -> float -> decimal
// round trip. Returns such a literal, or nullopt when the budgeted search
// (binade-boundary targeted plus randomized) finds none.
std::optional<std::string> find_roundtrip_failure(const FormatSpec& fmt, int digits,
                                                  const RoundtripSearchOptions& options = {});

// True iff printing round(literal -> fmt) back to the same number of
// significant digits recovers the literal's value.
bool decimal_roundtrips(const std::string& literal, int digits, const FormatSpec& fmt);

} // namespace fpa
