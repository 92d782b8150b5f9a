// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include "fpa/condition.hpp"
#include "fpa/interval.hpp"
#include "fpa/polynomial.hpp"
#include "fpa/roundtrip.hpp"
#include "fpa/stable.hpp"
#include "fpa/stats.hpp"
#include "fpa/stochastic.hpp"
#include "fpa/summation.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <memory>
#include <span>
#include <sstream>

namespace fpa::cli {

namespace {

// One diagnostic row: a computed float against the oracle value.
ReportRow make_row(const std::string& method, double result, const ExactRational& exact,
                   const FormatSpec& fmt, const std::string& note = "") {
    ReportRow row;
    row.method = method;
    row.result = std::isfinite(result) ? shortest_roundtrip_decimal(result)
                                       : (std::isnan(result) ? "nan" : (result > 0 ? "inf" : "-inf"));
    row.exact = exact_display(exact);
    if (std::isfinite(result)) {
        ExactRational err = (ExactRational::from_float(result) - exact).abs();
        row.relative_error =
            exact.is_zero() ? (err.is_zero() ? 0.0 : HUGE_VAL) : to_nearest_double(err / exact.abs());
        row.error_ulps = to_nearest_double(err / ulp_at(exact, fmt));
    } else {
        row.relative_error = HUGE_VAL;
        row.error_ulps = HUGE_VAL;
    }
    row.note = note;
    return row;
}

ReportRow make_toy_row(const std::string& method, const ToyFloat& result,
                       const ExactRational& exact, const FormatSpec& fmt,
                       std::string note = "") {
    ReportRow row;
    row.method = method;
    row.result = shortest_roundtrip_decimal(result);
    row.exact = exact_display(exact);
    if (result.is_finite()) {
        ExactRational err = (result.to_rational() - exact).abs();
        row.relative_error =
            exact.is_zero() ? (err.is_zero() ? 0.0 : HUGE_VAL) : to_nearest_double(err / exact.abs());
        row.error_ulps = to_nearest_double(err / ulp_at(exact, fmt));
    }
    row.note = std::move(note);
    return row;
}

double parse_double_config(const std::string& literal, const char* key, Report& report) {
    ExactRational q = parse_decimal(literal);
    double v = to_nearest_double(q);
    report.config(key, literal);
    if (!(ExactRational::from_float(v) == q))
        report.notes.push_back(std::string(key) + " literal is not binary64-exact; rounded to " +
                               shortest_roundtrip_decimal(v));
    return v;
}

std::string interval_text(const interval::Interval& iv) {
    auto endpoint = [](double v) {
        if (std::isfinite(v)) return shortest_roundtrip_decimal(v);
        return std::string(v > 0 ? "inf" : "-inf");
    };
    double w = interval::iv_width(iv);
    return "[" + endpoint(iv.lo) + ", " + endpoint(iv.hi) + "] (width " +
           (std::isfinite(w) ? shortest_roundtrip_decimal(w) : "inf") + ")";
}

} // namespace

RoundingMode rounding_mode_from_name(const std::string& name) {
    if (name == "nearest-even" || name == "nearest") return RoundingMode::NearestEven;
    if (name == "toward-positive" || name == "up") return RoundingMode::TowardPositive;
    if (name == "toward-negative" || name == "down") return RoundingMode::TowardNegative;
    if (name == "toward-zero" || name == "zero") return RoundingMode::TowardZero;
    if (name == "away-from-zero" || name == "away") return RoundingMode::AwayFromZero;
    if (name == "farthest-from-exact" || name == "farthest") return RoundingMode::FarthestFromExact;
    throw usage_error("unknown rounding mode: " + name);
}

void write_binary64_le(const std::string& path, const std::vector<double>& xs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw diagnostic_error("cannot open " + path + " for writing");
    for (double x : xs) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
        unsigned char bytes[8];
        for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
        out.write(reinterpret_cast<const char*>(bytes), 8);
    }
}

std::vector<double> read_binary64_le(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw diagnostic_error("cannot open " + path);
    std::vector<double> xs;
    unsigned char bytes[8];
    while (in.read(reinterpret_cast<char*>(bytes), 8)) {
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
        xs.push_back(std::bit_cast<double>(bits));
    }
    return xs;
}

std::vector<double> load_data(const DataOptions& options, const FormatSpec& fmt, Report& report) {
    std::vector<double> xs;
    if (options.input) {
        std::size_t inexact = 0;
        if (options.binary_io) {
            xs = read_binary64_le(*options.input);
            if (!(fmt == FormatSpec::binary64())) {
                for (double& x : xs) {
                    ToyResult r = round_rational(ExactRational::from_float(x), fmt,
                                                 RoundingMode::NearestEven);
                    if (r.flags.inexact) ++inexact;
                    x = r.value.is_finite() ? to_nearest_double(r.value.to_rational())
                                            : (r.value.negative() ? -HUGE_VAL : HUGE_VAL);
                }
            }
            report.config("input", *options.input + " (binary64)");
        } else {
            std::ifstream in(*options.input);
            if (!in) throw diagnostic_error("cannot open " + *options.input);
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                std::size_t hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                std::size_t begin = line.find_first_not_of(" \t\r");
                if (begin == std::string::npos) continue;
                std::size_t end = line.find_last_not_of(" \t\r");
                std::string token = line.substr(begin, end - begin + 1);
                ExactRational q;
                try {
                    q = parse_decimal(token);
                } catch (const parse_error& e) {
                    throw usage_error(*options.input + ":" + std::to_string(lineno) + ": " +
                                      e.what());
                }
                ToyResult r = round_rational(q, fmt, RoundingMode::NearestEven);
                if (r.flags.inexact) ++inexact;
                if (!r.value.is_finite())
                    throw diagnostic_error(*options.input + ":" + std::to_string(lineno) +
                                           ": value overflows the working format");
                xs.push_back(to_nearest_double(r.value.to_rational()));
            }
            report.config("input", *options.input);
            report.notes.push_back("decimal input conversions: " + std::to_string(inexact) +
                                   " of " + std::to_string(xs.size()) + " were inexact in " +
                                   fmt.to_text());
        }
    } else {
        SplitMix64 rng(options.seed);
        xs.reserve(options.n);
        const bool b32 = fmt == FormatSpec::binary32();
        const bool b64 = fmt == FormatSpec::binary64();
        for (std::size_t i = 0; i < options.n; ++i) {
            if (options.dist == "ones") {
                xs.push_back(1.0);
            } else if (options.dist == "uniform") {
                if (b32) {
                    xs.push_back(rng.next_float());
                } else if (b64) {
                    xs.push_back(rng.next_double());
                } else {
                    ToyResult r = round_rational(ExactRational::from_float(rng.next_double()), fmt,
                                                 RoundingMode::NearestEven);
                    xs.push_back(to_nearest_double(r.value.to_rational()));
                }
            } else {
                throw usage_error("unknown distribution: " + options.dist);
            }
        }
        report.config("n", std::to_string(options.n));
        report.config("dist", options.dist);
        report.config("seed", std::to_string(options.seed));
    }
    if (options.save_data) {
        write_binary64_le(*options.save_data, xs);
        report.notes.push_back("data written to " + *options.save_data + " as binary64");
    }
    return xs;
}

Report cmd_sum(const SumOptions& options) {
    Report report;
    report.command = "sum";
    const FormatSpec& fmt = options.accumulator_fmt;
    std::vector<double> xs = load_data(options.data, fmt, report);
    if (xs.empty()) throw usage_error("sum needs at least one value");
    report.config("accumulator", fmt.to_text());
    report.config("base_block", std::to_string(options.base_block));

    ExactRational exact = summation::exact_sum<double>(xs);
    using summation::Method;

    if (fmt == FormatSpec::binary64()) {
        std::span<const double> s(xs);
        report.rows.push_back(
            make_row("naive", summation::sum_naive<double>(s), exact, fmt));
        report.rows.push_back(make_row("sorted", summation::sum_sorted<double>(s), exact, fmt));
        report.rows.push_back(
            make_row("pairwise", summation::sum_pairwise<double>(s, options.base_block), exact, fmt));
        report.rows.push_back(make_row("kahan", summation::sum_kahan<double>(s), exact, fmt));
        report.rows.push_back(make_row("neumaier", summation::sum_neumaier<double>(s), exact, fmt));
    } else if (fmt == FormatSpec::binary32()) {
        std::vector<float> fs(xs.begin(), xs.end());
        std::span<const float> s(fs);
        report.rows.push_back(make_row("naive", summation::sum_naive<float>(s), exact, fmt));
        report.rows.push_back(make_row("sorted", summation::sum_sorted<float>(s), exact, fmt));
        report.rows.push_back(
            make_row("pairwise", summation::sum_pairwise<float>(s, options.base_block), exact, fmt));
        report.rows.push_back(make_row("kahan", summation::sum_kahan<float>(s), exact, fmt));
        report.rows.push_back(make_row("neumaier", summation::sum_neumaier<float>(s), exact, fmt));
    } else {
        report.rows.push_back(
            make_row("naive", summation::sum_naive(std::span<const double>(xs), fmt), exact, fmt));
        if (fmt == FormatSpec::binary16()) {
            report.rows.push_back(make_row("mixed", summation::sum_mixed(xs), exact,
                                           FormatSpec::binary32(),
                                           "binary32 accumulator over binary16 terms"));
        }
        report.notes.push_back("compensated variants run on native formats only");
    }

    for (Method m : {Method::Naive, Method::Pairwise, Method::Neumaier}) {
        double eps = to_nearest_double(fmt.epsilon());
        std::ostringstream os;
        os << "model " << summation::to_string(m) << ": "
           << shortest_roundtrip_decimal(summation::predicted_relative_error(xs.size(), eps, m));
        report.notes.push_back(os.str());
    }
    sort_rows(report);
    return report;
}

Report cmd_quadratic(const QuadraticOptions& options) {
    Report report;
    report.command = "quadratic";
    double a = parse_double_config(options.a, "a", report);
    double b = parse_double_config(options.b, "b", report);
    double c = parse_double_config(options.c, "c", report);

    stable::QuadraticRoots naive = stable::quadratic_naive(a, b, c);
    stable::QuadraticRoots robust = stable::quadratic_robust(a, b, c);
    const FormatSpec fmt = FormatSpec::binary64();

    ExactRational ra = ExactRational::from_float(a);
    ExactRational rb = ExactRational::from_float(b);
    ExactRational rc = ExactRational::from_float(c);
    ExactRational disc = rb * rb - ExactRational(4) * ra * rc;
    report.notes.push_back("discriminant = " + exact_display(disc));

    if (ExactRational(0) < disc) {
        auto [sq, sq_hi] = sqrt_enclosure(disc, 200);
        ExactRational two_a = ExactRational(2) * ra;
        ExactRational x_lo = (-rb - sq) / two_a;
        ExactRational x_hi = (-rb + sq) / two_a;
        ExactRational x1 = x_lo, x2 = x_hi;
        if (x2 < x1) std::swap(x1, x2);
        report.rows.push_back(make_row("robust.x1", robust.x1, x1, fmt));
        report.rows.push_back(make_row("robust.x2", robust.x2, x2, fmt));
        report.rows.push_back(make_row("naive.x1", naive.x1, x1, fmt));
        report.rows.push_back(make_row("naive.x2", naive.x2, x2, fmt));
    } else if (disc.is_zero()) {
        ExactRational root = -rb / (ExactRational(2) * ra);
        report.rows.push_back(make_row("robust.double_root", robust.x1, root, fmt));
        report.rows.push_back(make_row("naive.double_root", naive.x1, root, fmt));
    } else {
        ExactRational re = -rb / (ExactRational(2) * ra);
        auto [im_lo, im_hi] = sqrt_enclosure(-disc, 200);
        ExactRational im = im_lo / (ExactRational(2) * ra).abs();
        report.rows.push_back(make_row("robust.re", robust.x1, re, fmt));
        report.rows.push_back(make_row("robust.im", robust.x2, im, fmt));
        report.rows.push_back(make_row("naive.re", naive.x1, re, fmt));
        report.rows.push_back(make_row("naive.im", naive.x2, im, fmt));
        report.notes.push_back("complex pair: x = re +- im*i");
    }
    sort_rows(report);
    return report;
}

Report cmd_variance(const VarianceOptions& options) {
    Report report;
    report.command = "variance";
    const FormatSpec& fmt = options.fmt;
    std::vector<double> xs;
    if (options.shifted_demo) {
        xs = {1e9 + 1.0, 1e9 + 2.0, 1e9 + 3.0, 1e9 + 4.0};
        report.config("demo", "shifted (1e9 + [1,2,3,4])");
    } else {
        // decimal input rounds into the working format up front, and that
        // conversion loss is itself part of the report
        xs = load_data(options.data, fmt, report);
    }
    if (xs.size() < 2) throw usage_error("variance needs at least two values");
    report.config("fmt", fmt.to_text());

    ExactRational exact = stats::exact_variance_sample(xs);
    bool native = fmt == FormatSpec::binary32() || fmt == FormatSpec::binary64();
    report.rows.push_back(make_row("naive", stats::variance_naive(xs, fmt), exact, fmt,
                                   "sum-of-squares formula"));
    if (fmt == FormatSpec::binary32()) {
        stats::OnlineStats<float> acc;
        for (double x : xs) acc = stats::welford_update(acc, static_cast<float>(x));
        report.rows.push_back(make_row("welford", stats::variance_sample(acc), exact, fmt,
                                       "inputs rounded to binary32"));
    } else if (native) {
        auto acc = stats::welford_accumulate<double>(xs);
        report.rows.push_back(make_row("welford", stats::variance_sample(acc), exact, fmt));
    }
    auto acc64 = stats::welford_accumulate<double>(xs);
    report.rows.push_back(
        make_row("welford64", stats::variance_sample(acc64), exact, FormatSpec::binary64()));
    if (native) {
        report.rows.push_back(make_row("two-pass", stats::variance_two_pass(xs, fmt), exact, fmt,
                                       "corrected two-pass"));
    } else {
        report.notes.push_back("welford/two-pass rows run on native formats only");
    }
    sort_rows(report);
    return report;
}

Report cmd_triangle(const TriangleOptions& options) {
    Report report;
    report.command = "triangle";
    double a = parse_double_config(options.a, "a", report);
    double b = parse_double_config(options.b, "b", report);
    double c = parse_double_config(options.c, "c", report);
    stable::TriangleSides sides = stable::TriangleSides::sorted(a, b, c);
    if (!sides.valid()) throw diagnostic_error("sides do not form a triangle");

    ExactRational pa = ExactRational::from_float(sides.a);
    ExactRational pb = ExactRational::from_float(sides.b);
    ExactRational pc = ExactRational::from_float(sides.c);
    ExactRational p = (pa + pb + pc) / ExactRational(2);
    auto [area_lo, area_hi] = sqrt_enclosure(p * (p - pa) * (p - pb) * (p - pc), 200);
    const FormatSpec fmt = FormatSpec::binary64();
    report.rows.push_back(make_row("kahan", stable::area_kahan(sides), area_lo, fmt));
    report.rows.push_back(make_row("heron", stable::heron_naive(sides), area_lo, fmt));
    sort_rows(report);
    return report;
}

Report cmd_complex(const ComplexOptions& options) {
    Report report;
    report.command = "complex";
    report.config("op", options.op);
    double are = parse_double_config(options.a_re, "a_re", report);
    double aim = parse_double_config(options.a_im, "a_im", report);

    if (options.op == "abs") {
        ExactRational sq = ExactRational::from_float(are) * ExactRational::from_float(are) +
                           ExactRational::from_float(aim) * ExactRational::from_float(aim);
        auto [mod, mod_hi] = sqrt_enclosure(sq, 200);
        if (options.single_precision) {
            const FormatSpec fmt = FormatSpec::binary32();
            float r = static_cast<float>(are), i = static_cast<float>(aim);
            report.rows.push_back(
                make_row("robust", stable::complex_abs_robust(r, i), mod, fmt, "scaled"));
            report.rows.push_back(
                make_row("naive", stable::complex_abs_naive(r, i), mod, fmt, "re^2+im^2 first"));
        } else {
            const FormatSpec fmt = FormatSpec::binary64();
            report.rows.push_back(
                make_row("robust", stable::complex_abs_robust(are, aim), mod, fmt, "scaled"));
            report.rows.push_back(
                make_row("naive", stable::complex_abs_naive(are, aim), mod, fmt, "re^2+im^2 first"));
        }
    } else if (options.op == "div") {
        double bre = parse_double_config(options.b_re, "b_re", report);
        double bim = parse_double_config(options.b_im, "b_im", report);
        ExactRational rar = ExactRational::from_float(are), rai = ExactRational::from_float(aim);
        ExactRational rbr = ExactRational::from_float(bre), rbi = ExactRational::from_float(bim);
        ExactRational den = rbr * rbr + rbi * rbi;
        if (den.is_zero()) throw diagnostic_error("division by complex zero");
        ExactRational exact_re = (rar * rbr + rai * rbi) / den;
        ExactRational exact_im = (rai * rbr - rar * rbi) / den;
        const FormatSpec fmt = FormatSpec::binary64();
        stable::ComplexDivResult robust = stable::complex_div_robust(are, aim, bre, bim);
        report.rows.push_back(make_row("robust.re", robust.re, exact_re, fmt, "smith scaling"));
        report.rows.push_back(make_row("robust.im", robust.im, exact_im, fmt, "smith scaling"));
        double nden = bre * bre + bim * bim;
        report.rows.push_back(
            make_row("naive.re", (are * bre + aim * bim) / nden, exact_re, fmt, "textbook"));
        report.rows.push_back(
            make_row("naive.im", (aim * bre - are * bim) / nden, exact_im, fmt, "textbook"));
    } else {
        throw usage_error("complex op must be abs or div");
    }
    sort_rows(report);
    return report;
}

Report cmd_polynomial(const PolynomialOptions& options) {
    Report report;
    report.command = "polynomial";
    std::vector<double> coeffs;
    std::stringstream ss(options.coeffs);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        coeffs.push_back(to_nearest_double(parse_decimal(token)));
    }
    polynomial::Polynomial p(coeffs);
    report.config("coeffs", options.coeffs);
    double x = parse_double_config(options.x, "x", report);

    ExactRational exact = polynomial::exact_eval(p, x);
    const FormatSpec fmt = FormatSpec::binary64();
    report.rows.push_back(make_row("naive", polynomial::eval_naive(p, x), exact, fmt));
    report.rows.push_back(make_row("horner", polynomial::eval_horner(p, x), exact, fmt));
    report.rows.push_back(make_row("horner-fma", polynomial::eval_horner_fma(p, x), exact, fmt));
    report.rows.push_back(
        make_row("horner-compensated", polynomial::eval_horner_compensated(p, x), exact, fmt));
    sort_rows(report);
    return report;
}

Report cmd_condition(const ConditionOptions& options) {
    Report report;
    report.command = "condition";
    if (options.probe) {
        report.config("probe", options.probe_fmt.to_text());
        auto parabola = [](double t) { return 1.0 + (t - 1.0) * (t - 1.0); };
        condition::ProbeResult pr = condition::min_resolution_probe(parabola, 1.0, options.probe_fmt);
        ReportRow row;
        row.method = "plateau-half-width";
        row.result = shortest_roundtrip_decimal(pr.plateau_half_width);
        row.exact = shortest_roundtrip_decimal(pr.sqrt_eps);
        row.relative_error = std::fabs(pr.plateau_half_width / pr.sqrt_eps - 1.0);
        row.note = "f(x) = 1 + (x-1)^2; exact column shows sqrt(eps)";
        report.rows.push_back(row);
        return report;
    }

    condition::CatalogFunction fn = condition::catalog_function(options.function, options.parameter);
    report.config("function", fn.name);
    double x = parse_double_config(options.x, "x", report);
    condition::ConditionReport analytic = condition::kappa_analytic(fn.f, fn.df, x);
    condition::ConditionReport numeric = condition::kappa_numeric(fn.f, x);

    ExactRational exact_kappa = std::isfinite(analytic.kappa)
                                    ? ExactRational::from_float(analytic.kappa)
                                    : ExactRational(0);
    const FormatSpec fmt = FormatSpec::binary64();
    auto describe = [](const condition::ConditionReport& r) {
        if (r.singular) return std::string("singular");
        std::ostringstream os;
        os << "digits lost " << r.digits_lost_dec << ", bits lost " << r.bits_lost;
        return os.str();
    };
    if (analytic.singular) {
        ReportRow row;
        row.method = "analytic";
        row.result = "inf";
        row.exact = "singular";
        row.note = describe(analytic);
        report.rows.push_back(row);
    } else {
        report.rows.push_back(make_row("analytic", analytic.kappa, exact_kappa, fmt,
                                       describe(analytic)));
        report.rows.push_back(make_row("numeric", numeric.kappa, exact_kappa, fmt,
                                       describe(numeric)));
    }
    sort_rows(report);
    return report;
}

namespace {

template <typename N>
N generic_small_root_naive(N a, N b, N c) {
    using std::sqrt;
    N disc = b * b - N(4.0) * a * c;
    N s = sqrt(disc);
    N x1 = (N(0.0) - b + s) / (N(2.0) * a);
    N x2 = (N(0.0) - b - s) / (N(2.0) * a);
    return fabs(x1) < fabs(x2) ? x1 : x2;
}

template <typename N>
N generic_small_root_robust(N a, N b, N c) {
    using std::sqrt;
    N disc = b * b - N(4.0) * a * c;
    N s = sqrt(disc);
    N mag = fabs(b) + s;
    N q = b < N(0.0) ? mag : N(0.0) - mag;
    N x1 = q / (N(2.0) * a);
    N x2 = (N(2.0) * c) / q;
    return fabs(x1) < fabs(x2) ? x1 : x2;
}

} // namespace

Report cmd_stochastic(const StochasticOptions& options) {
    using stochastic::Computation;
    using stochastic::InstrumentedValue;
    using stochastic::PerturbContext;

    Report report;
    report.command = "stochastic";
    report.config("computation", options.computation);
    report.config("policy", options.policy);

    Computation computation;
    ExactRational oracle(0);
    bool oracle_known = true;

    if (options.computation == "rump") {
        double a = to_nearest_double(parse_decimal(options.a));
        double b = to_nearest_double(parse_decimal(options.b));
        report.config("a", options.a);
        report.config("b", options.b);
        computation = [a, b](PerturbContext& ctx) {
            return stable::rump_eval(InstrumentedValue(a, &ctx), InstrumentedValue(b, &ctx)).value();
        };
        oracle = stable::exact_rump(ExactRational::from_float(a), ExactRational::from_float(b));
    } else if (options.computation == "quadratic-naive" || options.computation == "quadratic-robust") {
        double a = to_nearest_double(parse_decimal(options.a));
        double b = to_nearest_double(parse_decimal(options.b));
        double c = to_nearest_double(parse_decimal(options.c));
        report.config("a", options.a);
        report.config("b", options.b);
        report.config("c", options.c);
        bool robust = options.computation == "quadratic-robust";
        computation = [a, b, c, robust](PerturbContext& ctx) {
            InstrumentedValue ia(a, &ctx), ib(b, &ctx), ic(c, &ctx);
            return robust ? generic_small_root_robust(ia, ib, ic).value()
                          : generic_small_root_naive(ia, ib, ic).value();
        };
        ExactRational disc = ExactRational::from_float(b) * ExactRational::from_float(b) -
                             ExactRational(4) * ExactRational::from_float(a) *
                                 ExactRational::from_float(c);
        if (ExactRational(0) < disc) {
            auto [sq, sq_hi] = sqrt_enclosure(disc, 200);
            ExactRational two_a = ExactRational(2) * ExactRational::from_float(a);
            ExactRational x1 = (-ExactRational::from_float(b) - sq) / two_a;
            ExactRational x2 = (-ExactRational::from_float(b) + sq) / two_a;
            oracle = x1.abs() < x2.abs() ? x1 : x2;
        } else {
            oracle_known = false;
        }
    } else {
        // data-driven computations share a fixed data set
        SplitMix64 rng(options.data_seed);
        auto data = std::make_shared<std::vector<double>>();
        data->reserve(options.data_n);
        for (std::size_t i = 0; i < options.data_n; ++i) data->push_back(rng.next_double());
        report.config("data_n", std::to_string(options.data_n));
        report.config("data_seed", std::to_string(options.data_seed));

        auto instrumented = [data](PerturbContext& ctx, auto fold) {
            std::vector<InstrumentedValue> vs;
            vs.reserve(data->size());
            for (double x : *data) vs.push_back(InstrumentedValue(x, &ctx));
            return fold(std::span<const InstrumentedValue>(vs)).value();
        };
        if (options.computation == "sum-naive") {
            computation = [instrumented](PerturbContext& ctx) {
                return instrumented(ctx, [](auto s) { return summation::sum_naive(s); });
            };
            oracle = summation::exact_sum<double>(*data);
        } else if (options.computation == "sum-kahan") {
            computation = [instrumented](PerturbContext& ctx) {
                return instrumented(ctx, [](auto s) { return summation::sum_kahan(s); });
            };
            oracle = summation::exact_sum<double>(*data);
        } else if (options.computation == "sum-neumaier") {
            computation = [instrumented](PerturbContext& ctx) {
                return instrumented(ctx, [](auto s) { return summation::sum_neumaier(s); });
            };
            oracle = summation::exact_sum<double>(*data);
        } else if (options.computation == "sum-pairwise") {
            computation = [instrumented](PerturbContext& ctx) {
                return instrumented(ctx, [](auto s) { return summation::sum_pairwise(s, 32); });
            };
            oracle = summation::exact_sum<double>(*data);
        } else if (options.computation == "variance-naive") {
            computation = [data](PerturbContext& ctx) {
                InstrumentedValue sum(0.0, &ctx), sum_sq(0.0, &ctx);
                for (double x : *data) {
                    InstrumentedValue v(x, &ctx);
                    sum = sum + v;
                    sum_sq = sum_sq + v * v;
                }
                InstrumentedValue n(static_cast<double>(data->size()));
                InstrumentedValue n1(static_cast<double>(data->size() - 1));
                return ((sum_sq - (sum * sum) / n) / n1).value();
            };
            oracle = stats::exact_variance_sample(*data);
        } else if (options.computation == "variance-welford") {
            computation = [data](PerturbContext& ctx) {
                stats::OnlineStats<InstrumentedValue> acc;
                acc.mean = InstrumentedValue(0.0, &ctx);
                acc.m2 = InstrumentedValue(0.0, &ctx);
                for (double x : *data) acc = stats::welford_update(acc, InstrumentedValue(x, &ctx));
                return stats::variance_sample(acc).value();
            };
            oracle = stats::exact_variance_sample(*data);
        } else {
            throw usage_error("unknown stochastic computation: " + options.computation);
        }
    }

    const FormatSpec fmt = FormatSpec::binary64();
    if (options.policy == "random") {
        report.config("n", std::to_string(options.n));
        report.config("seed", std::to_string(options.seed));
        stochastic::StochasticReport sr =
            stochastic::run_stochastic(computation, options.n, options.seed);
        std::ostringstream note;
        note << "significant_digits=" << sr.significant_digits << " stddev="
             << (std::isfinite(sr.stddev) ? shortest_roundtrip_decimal(sr.stddev) : "inf")
             << " flagged=" << sr.flagged;
        if (oracle_known) {
            report.rows.push_back(make_row("mean", sr.mean, oracle, fmt, note.str()));
        } else {
            ReportRow row;
            row.method = "mean";
            row.result = std::isfinite(sr.mean) ? shortest_roundtrip_decimal(sr.mean) : "nan";
            row.note = note.str();
            report.rows.push_back(row);
        }
    } else if (options.policy == "suite") {
        auto runs = stochastic::run_directed_suite(computation);
        for (const auto& r : runs) {
            if (oracle_known) {
                report.rows.push_back(make_row(to_string(r.mode), r.result, oracle, fmt));
            } else {
                ReportRow row;
                row.method = to_string(r.mode);
                row.result = std::isfinite(r.result) ? shortest_roundtrip_decimal(r.result) : "nan";
                report.rows.push_back(row);
            }
        }
        double spread = stochastic::directed_spread(runs);
        report.notes.push_back(
            "directed spread = " +
            (std::isfinite(spread) ? shortest_roundtrip_decimal(spread) : "inf"));
    } else {
        stochastic::Policy policy = stochastic::policy_from_name(options.policy);
        PerturbContext ctx(policy, substream(options.seed, 0));
        double r = computation(ctx);
        if (oracle_known) {
            report.rows.push_back(make_row(options.policy, r, oracle, fmt));
        } else {
            ReportRow row;
            row.method = options.policy;
            row.result = std::isfinite(r) ? shortest_roundtrip_decimal(r) : "nan";
            report.rows.push_back(row);
        }
    }
    sort_rows(report);
    return report;
}

Report cmd_interval(const IntervalOptions& options) {
    Report report;
    report.command = "interval";
    report.config("demo", options.demo);
    if (options.demo == "demon") {
        report.config("iterations", std::to_string(options.iterations));
        interval::DemonDemo demo = interval::iv_demon_demo(options.iterations);
        auto width_row = [&](const std::string& method, const std::vector<double>& widths) {
            ReportRow row;
            row.method = method;
            row.result = shortest_roundtrip_decimal(widths.back());
            row.note = "first " + shortest_roundtrip_decimal(widths.front()) + ", last " +
                       shortest_roundtrip_decimal(widths.back());
            return row;
        };
        report.rows.push_back(width_row("eft-outward", demo.eft_widths));
        report.rows.push_back(width_row("eps-inflation", demo.inflation_widths));
        report.rows.push_back(width_row("exact-iter-eft", demo.exact_eft_widths));
        report.rows.push_back(width_row("exact-iter-inflation", demo.exact_inflation_widths));
        return report;
    }
    if (options.demo != "op") throw usage_error("interval demo must be demon or op");

    auto endpoint = [&](const std::string& lit) { return to_nearest_double(parse_decimal(lit)); };
    interval::Interval a = interval::make_interval(endpoint(options.a_lo), endpoint(options.a_hi));
    report.config("a", interval_text(a));
    interval::Interval out;
    if (options.op == "sqrt") {
        out = interval::iv_sqrt(a);
    } else {
        interval::Interval b =
            interval::make_interval(endpoint(options.b_lo), endpoint(options.b_hi));
        report.config("b", interval_text(b));
        if (options.op == "add") out = interval::iv_add(a, b);
        else if (options.op == "sub") out = interval::iv_sub(a, b);
        else if (options.op == "mul") out = interval::iv_mul(a, b);
        else if (options.op == "div") out = interval::iv_div(a, b);
        else throw usage_error("interval op must be add|sub|mul|div|sqrt");
    }
    ReportRow row;
    row.method = options.op;
    double w = interval::iv_width(out);
    row.result = std::isfinite(w) ? shortest_roundtrip_decimal(w) : "inf";
    row.note = interval_text(out);
    report.rows.push_back(row);
    return report;
}

Report cmd_roundtrip(const RoundtripOptions& options) {
    Report report;
    report.command = "roundtrip";
    report.config("mode", options.mode);

    if (options.mode == "identity") {
        double sum = 0.1 + 0.2;
        ExactRational exact_sum = ExactRational::from_float(0.1) + ExactRational::from_float(0.2);
        report.rows.push_back(
            make_row("0.1+0.2", sum, exact_sum, FormatSpec::binary64(), "float arithmetic"));
        report.rows.push_back(make_row("0.3", 0.3, parse_decimal("0.3"), FormatSpec::binary64(),
                                       "rounded literal"));
        report.notes.push_back("shortest decimals: " + shortest_roundtrip_decimal(sum) + " vs " +
                               shortest_roundtrip_decimal(0.3));
        report.notes.push_back(std::string("0.1 + 0.2 == 0.3 in exact arithmetic: ") +
                               (exact_sum == parse_decimal("0.3") ? "true" : "false"));
        sort_rows(report);
        return report;
    }
    if (options.mode == "value") {
        report.config("fmt", options.fmt.to_text());
        ExactRational q = parse_decimal(options.value);
        ToyResult r = round_rational(q, options.fmt, RoundingMode::NearestEven);
        if (!r.value.is_finite()) throw diagnostic_error("value overflows the format");
        report.rows.push_back(make_toy_row("round-nearest", r.value, q, options.fmt,
                                           r.flags.inexact ? "inexact" : "exact"));
        if (r.value.is_finite() && options.fmt.radix == 2)
            report.notes.push_back("exact expansion: " +
                                   exact_decimal_string(r.value.to_rational()));
        sort_rows(report);
        return report;
    }
    if (options.mode != "find-failure") throw usage_error("roundtrip mode must be identity|value|find-failure");

    report.config("fmt", options.fmt.to_text());
    report.config("digits", std::to_string(options.digits));
    report.config("exhaustive", options.exhaustive ? "true" : "false");
    RoundtripSearchOptions search;
    search.exhaustive = options.exhaustive;
    search.seed = options.seed;
    auto failure = find_roundtrip_failure(options.fmt, options.digits, search);
    ReportRow row;
    row.method = "search";
    if (failure) {
        row.result = *failure;
        ExactRational v = parse_decimal(*failure);
        ToyResult rounded = round_rational(v, options.fmt, RoundingMode::NearestEven);
        row.exact = exact_display(v);
        row.note = "prints back as " +
                   rounded_decimal_string(rounded.value.to_rational().abs(), options.digits);
    } else {
        row.result = "";
        row.note = "no failure found within the search budget";
    }
    report.rows.push_back(row);
    return report;
}

Report cmd_toy(const ToyOptions& options) {
    Report report;
    report.command = "toy";
    report.config("spec", options.spec.to_text());
    report.config("demo", options.demo);
    const FormatSpec& fmt = options.spec;

    if (options.demo == "diff-squares") {
        ExactRational qa = parse_decimal(options.a);
        ExactRational qb = parse_decimal(options.b);
        report.config("a", options.a);
        report.config("b", options.b);
        ToyFloat a = round_rational(qa, fmt, RoundingMode::NearestEven).value;
        ToyFloat b = round_rational(qb, fmt, RoundingMode::NearestEven).value;
        ExactRational exact = a.to_rational() * a.to_rational() - b.to_rational() * b.to_rational();
        ToyResult naive = stable::diff_squares_naive(a, b);
        ToyResult factored = stable::diff_squares_factored(a, b);
        report.rows.push_back(make_toy_row("naive", naive.value, exact, fmt,
                                           naive.flags.inexact ? "inexact" : "exact"));
        report.rows.push_back(make_toy_row("factored", factored.value, exact, fmt,
                                           factored.flags.inexact ? "inexact" : "exact"));
        sort_rows(report);
        return report;
    }
    if (options.demo == "round") {
        report.config("value", options.value);
        report.config("mode", options.mode);
        ExactRational q = parse_decimal(options.value);
        ToyResult r = round_rational(q, fmt, rounding_mode_from_name(options.mode));
        std::string flags;
        if (r.flags.inexact) flags += "inexact ";
        if (r.flags.underflow) flags += "underflow ";
        if (r.flags.overflow) flags += "overflow ";
        if (r.value.is_finite()) {
            report.rows.push_back(make_toy_row("round", r.value, q, fmt, flags));
        } else {
            ReportRow row;
            row.method = "round";
            row.result = r.value.negative() ? "-inf" : "inf";
            row.exact = exact_display(q);
            row.note = flags;
            report.rows.push_back(row);
        }
        return report;
    }
    if (options.demo != "double-round") throw usage_error("toy demo must be diff-squares|round|double-round");

    if (!options.low_spec) throw usage_error("double-round needs --low-spec");
    report.config("low_spec", options.low_spec->to_text());
    report.config("value", options.value);
    ExactRational q = parse_decimal(options.value);
    DoubleRoundResult dr = double_round(q, fmt, *options.low_spec);
    report.rows.push_back(make_toy_row("chained", dr.chained, q, *options.low_spec, "via high precision"));
    report.rows.push_back(make_toy_row("direct", dr.direct, q, *options.low_spec, "one-step"));
    report.notes.push_back(std::string("differs: ") + (dr.differs ? "true" : "false"));
    sort_rows(report);
    return report;
}

Report cmd_rump(const RumpOptions& options) {
    Report report;
    report.command = "rump";
    double a = parse_double_config(options.a, "a", report);
    double b = parse_double_config(options.b, "b", report);
    ExactRational exact = stable::exact_rump(ExactRational::from_float(a), ExactRational::from_float(b));
    report.rows.push_back(make_row("naive-binary64", stable::rump_expression(a, b), exact,
                                   FormatSpec::binary64()));
    report.notes.push_back("exact value = " + exact.to_fraction_string());
    sort_rows(report);
    return report;
}

} // namespace fpa::cli
