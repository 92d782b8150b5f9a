// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace fpa;
using namespace fpa::cli;

struct FormatSpecOption {
    std::string text;
    FormatSpec value;
};

void add_format_option(CLI::App* cmd, const std::string& name, FormatSpec& target,
                       const std::string& description) {
    cmd->add_option_function<std::string>(
           name, [&target](const std::string& text) { target = FormatSpec::parse(text); },
           description)
        ->default_str(target.to_text());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fpa: floating-point self-defense diagnostics"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table|csv|json")
        ->default_str("table");

    std::uint64_t default_seed = 1;
    if (const char* env = std::getenv("FP_ARMORY_SEED")) {
        try {
            default_seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "fpa: ignoring malformed FP_ARMORY_SEED\n";
        }
    }

    auto add_data_options = [&](CLI::App* cmd, DataOptions& data) {
        data.seed = default_seed;
        cmd->add_option("--n", data.n, "number of generated values");
        cmd->add_option("--dist", data.dist, "distribution: uniform|ones");
        cmd->add_option("--seed", data.seed, "generator seed")->envname("FP_ARMORY_SEED");
        cmd->add_option("--input", data.input, "data file (decimal literals, one per line)");
        cmd->add_flag("--binary-io", data.binary_io, "read --input as raw little-endian binary64");
        cmd->add_option("--save-data", data.save_data, "write the working data as binary64");
    };

    SumOptions sum_options;
    CLI::App* sum = app.add_subcommand("sum", "summation ladder against the exact sum");
    add_data_options(sum, sum_options.data);
    add_format_option(sum, "--acc-format", sum_options.accumulator_fmt, "accumulator format");
    sum->add_option("--base-block", sum_options.base_block, "pairwise base block");

    QuadraticOptions quad_options;
    CLI::App* quad = app.add_subcommand("quadratic", "naive vs robust quadratic roots");
    quad->add_option("--a", quad_options.a, "coefficient a");
    quad->add_option("--b", quad_options.b, "coefficient b");
    quad->add_option("--c", quad_options.c, "coefficient c");

    VarianceOptions var_options;
    CLI::App* variance = app.add_subcommand("variance", "variance estimators against the oracle");
    add_data_options(variance, var_options.data);
    add_format_option(variance, "--fmt", var_options.fmt, "working format");
    variance->add_flag("--shifted-demo", var_options.shifted_demo,
                       "use the 1e9 + [1,2,3,4] cancellation showcase");

    TriangleOptions tri_options;
    CLI::App* triangle = app.add_subcommand("triangle", "heron vs kahan triangle area");
    triangle->add_option("--a", tri_options.a, "side a");
    triangle->add_option("--b", tri_options.b, "side b");
    triangle->add_option("--c", tri_options.c, "side c");

    ComplexOptions cx_options;
    CLI::App* cx = app.add_subcommand("complex", "robust complex modulus and division");
    cx->add_option("--op", cx_options.op, "abs|div");
    cx->add_option("--are", cx_options.a_re, "dividend real part");
    cx->add_option("--aim", cx_options.a_im, "dividend imaginary part");
    cx->add_option("--bre", cx_options.b_re, "divisor real part");
    cx->add_option("--bim", cx_options.b_im, "divisor imaginary part");
    cx->add_flag("!--double", cx_options.single_precision, "evaluate abs in binary64 instead");

    PolynomialOptions poly_options;
    CLI::App* poly = app.add_subcommand("polynomial", "polynomial evaluation strategies");
    poly->add_option("--coeffs", poly_options.coeffs, "ascending coefficients, comma separated");
    poly->add_option("--x", poly_options.x, "evaluation point");

    ConditionOptions cond_options;
    CLI::App* cond = app.add_subcommand("condition", "condition numbers and the sqrt(eps) probe");
    cond->add_option("--function", cond_options.function, "ln|exp|add-const|pow|log1p");
    cond->add_option("--param", cond_options.parameter, "family parameter (c or n)");
    cond->add_option("--x", cond_options.x, "evaluation point");
    cond->add_flag("--probe", cond_options.probe, "run the minimization resolution probe");
    add_format_option(cond, "--probe-fmt", cond_options.probe_fmt, "probe format");

    StochasticOptions sto_options;
    sto_options.seed = default_seed;
    CLI::App* sto = app.add_subcommand("stochastic", "randomized-rounding diagnosis");
    sto->add_option("--computation", sto_options.computation,
                    "rump|quadratic-naive|quadratic-robust|sum-*|variance-*");
    sto->add_option("--n", sto_options.n, "number of samples");
    sto->add_option("--seed", sto_options.seed, "sampling seed")->envname("FP_ARMORY_SEED");
    sto->add_option("--policy", sto_options.policy, "random|suite|up|down|zero|away|farthest|nearest");
    sto->add_option("--a", sto_options.a, "parameter a");
    sto->add_option("--b", sto_options.b, "parameter b");
    sto->add_option("--c", sto_options.c, "parameter c");
    sto->add_option("--data-n", sto_options.data_n, "data set size for sum/variance computations");
    sto->add_option("--data-seed", sto_options.data_seed, "data set seed");

    IntervalOptions iv_options;
    CLI::App* iv = app.add_subcommand("interval", "outward-rounded interval arithmetic");
    iv->add_option("--demo", iv_options.demo, "demon|op");
    iv->add_option("--iterations", iv_options.iterations, "demon iterations");
    iv->add_option("--op", iv_options.op, "add|sub|mul|div|sqrt");
    iv->add_option("--alo", iv_options.a_lo, "a lower endpoint");
    iv->add_option("--ahi", iv_options.a_hi, "a upper endpoint");
    iv->add_option("--blo", iv_options.b_lo, "b lower endpoint");
    iv->add_option("--bhi", iv_options.b_hi, "b upper endpoint");

    RoundtripOptions rt_options;
    rt_options.seed = default_seed;
    CLI::App* rt = app.add_subcommand("roundtrip", "decimal/binary conversion diagnostics");
    rt->add_option("--mode", rt_options.mode, "identity|value|find-failure");
    rt->add_option("--value", rt_options.value, "decimal literal for --mode value");
    add_format_option(rt, "--fmt", rt_options.fmt, "target format");
    rt->add_option("--digits", rt_options.digits, "significant digits for the search");
    rt->add_flag("--exhaustive", rt_options.exhaustive, "full sweep of the vulnerable decades");
    rt->add_option("--seed", rt_options.seed, "search seed")->envname("FP_ARMORY_SEED");

    ToyOptions toy_options;
    CLI::App* toy = app.add_subcommand("toy", "simulated-format demonstrations");
    add_format_option(toy, "--spec", toy_options.spec, "format, e.g. toy:10,3,-20,20");
    toy->add_option("--demo", toy_options.demo, "diff-squares|round|double-round");
    toy->add_option("--a", toy_options.a, "operand a");
    toy->add_option("--b", toy_options.b, "operand b");
    toy->add_option("--value", toy_options.value, "value to round");
    toy->add_option("--mode", toy_options.mode, "rounding mode name");
    FormatSpec low_spec_storage{10, 1, -20, 20, true};
    bool low_spec_given = false;
    toy->add_option_function<std::string>(
        "--low-spec",
        [&](const std::string& text) {
            low_spec_storage = FormatSpec::parse(text);
            low_spec_given = true;
        },
        "lower-precision format for double-round");

    RumpOptions rump_options;
    CLI::App* rump = app.add_subcommand("rump", "the cancellation showcase expression");
    rump->add_option("--a", rump_options.a, "integer a");
    rump->add_option("--b", rump_options.b, "integer b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        OutputFormat format = output_format_from_name(format_name);
        Report report;
        if (*sum) report = cmd_sum(sum_options);
        else if (*quad) report = cmd_quadratic(quad_options);
        else if (*variance) report = cmd_variance(var_options);
        else if (*triangle) report = cmd_triangle(tri_options);
        else if (*cx) report = cmd_complex(cx_options);
        else if (*poly) report = cmd_polynomial(poly_options);
        else if (*cond) report = cmd_condition(cond_options);
        else if (*sto) report = cmd_stochastic(sto_options);
        else if (*iv) report = cmd_interval(iv_options);
        else if (*rt) report = cmd_roundtrip(rt_options);
        else if (*toy) {
            if (low_spec_given) toy_options.low_spec = low_spec_storage;
            report = cmd_toy(toy_options);
        } else if (*rump) {
            report = cmd_rump(rump_options);
        }
        std::cout << render(report, format);
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "fpa: usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "fpa: parse error: " << e.what() << "\n";
        return 2;
    } catch (const diagnostic_error& e) {
        std::cerr << "fpa: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fpa: internal error: " << e.what() << "\n";
        return 1;
    }
}
