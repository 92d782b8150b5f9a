// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "report.hpp"

#include "fpa/formats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpa::cli {

// Shared data-source options: either generated (--n/--dist/--seed) or read
// from --input (decimal literals, one per line, '#' comments; raw
// little-endian binary64 with --binary-io).
struct DataOptions {
    std::size_t n = 1000000;
    std::string dist = "uniform"; // uniform | ones
    std::uint64_t seed = 1;
    std::optional<std::string> input;
    bool binary_io = false;
    std::optional<std::string> save_data; // write the working data set
};

// Loads (or generates) the data set rounded into `fmt`, recording the
// decimal->float conversion losses in `report`.
std::vector<double> load_data(const DataOptions& options, const FormatSpec& fmt, Report& report);

void write_binary64_le(const std::string& path, const std::vector<double>& xs);
std::vector<double> read_binary64_le(const std::string& path);

struct SumOptions {
    DataOptions data;
    FormatSpec accumulator_fmt = FormatSpec::binary32();
    std::size_t base_block = 32;
};
Report cmd_sum(const SumOptions& options);

struct QuadraticOptions {
    std::string a = "1", b = "1", c = "1"; // decimal literals
};
Report cmd_quadratic(const QuadraticOptions& options);

struct VarianceOptions {
    DataOptions data;
    FormatSpec fmt = FormatSpec::binary32();
    bool shifted_demo = false; // the 1e9 + [1,2,3,4] showcase
};
Report cmd_variance(const VarianceOptions& options);

struct TriangleOptions {
    std::string a = "3", b = "4", c = "5";
};
Report cmd_triangle(const TriangleOptions& options);

struct ComplexOptions {
    std::string op = "abs"; // abs | div
    std::string a_re = "3", a_im = "4";
    std::string b_re = "1", b_im = "0";
    bool single_precision = true;
};
Report cmd_complex(const ComplexOptions& options);

struct PolynomialOptions {
    std::string coeffs = "1,-2,1"; // ascending degree, comma separated
    std::string x = "1";
};
Report cmd_polynomial(const PolynomialOptions& options);

struct ConditionOptions {
    std::string function = "ln";
    double parameter = 0.0;
    std::string x = "1";
    bool probe = false;
    FormatSpec probe_fmt = FormatSpec::binary64();
};
Report cmd_condition(const ConditionOptions& options);

struct StochasticOptions {
    std::string computation = "rump";
    std::size_t n = 64;
    std::uint64_t seed = 1;
    std::string policy = "random"; // random | suite | up | down | zero | farthest | nearest
    std::string a = "77617", b = "33096", c = "1";
    std::size_t data_n = 10000;
    std::uint64_t data_seed = 7;
};
Report cmd_stochastic(const StochasticOptions& options);

struct IntervalOptions {
    std::string demo = "demon"; // demon | op
    std::size_t iterations = 100;
    std::string op = "add";
    std::string a_lo = "1", a_hi = "1", b_lo = "3", b_hi = "3";
};
Report cmd_interval(const IntervalOptions& options);

struct RoundtripOptions {
    std::string mode = "identity"; // identity | value | find-failure
    std::string value = "0.1";
    FormatSpec fmt = FormatSpec::binary32();
    int digits = 7;
    bool exhaustive = false;
    std::uint64_t seed = 1;
};
Report cmd_roundtrip(const RoundtripOptions& options);

struct ToyOptions {
    FormatSpec spec{10, 3, -20, 20, true};
    std::string demo = "diff-squares"; // diff-squares | round | double-round
    std::string a = "3.34", b = "3.33";
    std::string value = "3.47";
    std::string mode = "nearest-even";
    std::optional<FormatSpec> low_spec;
};
Report cmd_toy(const ToyOptions& options);

struct RumpOptions {
    std::string a = "77617", b = "33096";
};
Report cmd_rump(const RumpOptions& options);

RoundingMode rounding_mode_from_name(const std::string& name);

} // namespace fpa::cli
