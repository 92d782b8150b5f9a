// SPDX-License-Identifier: Apache-2.0
#include "fpa/condition.hpp"

#include <cmath>
#include <limits>

namespace fpa {
namespace condition {

namespace {

ConditionReport report_from_kappa(double kappa) {
    ConditionReport r;
    r.kappa = kappa;
    r.singular = !std::isfinite(kappa);
    if (kappa <= 0.0) {
        r.kappa = 0.0;
        r.digits_lost_dec = -std::numeric_limits<double>::infinity();
        r.bits_lost = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.digits_lost_dec = std::log10(kappa);
    r.bits_lost = std::log2(kappa);
    return r;
}

} // namespace

ConditionReport kappa_analytic(const ScalarFn& f, const ScalarFn& df, double x) {
    double fx = f(x);
    double dfx = df(x);
    if (!std::isfinite(fx) || !std::isfinite(dfx)) {
        ConditionReport r = report_from_kappa(std::numeric_limits<double>::infinity());
        return r;
    }
    if (fx == 0.0) {
        if (x * dfx == 0.0) return report_from_kappa(0.0);
        return report_from_kappa(std::numeric_limits<double>::infinity());
    }
    return report_from_kappa(std::fabs(x * dfx / fx));
}

ConditionReport kappa_numeric(const ScalarFn& f, double x) {
    const double eps = 0x1.0p-52;
    double h = std::max(std::fabs(x), 1.0) * std::cbrt(eps);
    double fp = f(x + h);
    double fm = f(x - h);
    double fx = f(x);
    if (!std::isfinite(fp) || !std::isfinite(fm) || !std::isfinite(fx))
        return report_from_kappa(std::numeric_limits<double>::infinity());
    double dfx = (fp - fm) / (2.0 * h);
    if (fx == 0.0)
        return report_from_kappa(x * dfx == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    return report_from_kappa(std::fabs(x * dfx / fx));
}

double kappa_compose(double k1, double k2) {
    if (k1 < 0.0 || k2 < 0.0) throw usage_error("condition numbers are nonnegative");
    return k1 * k2;
}

double kappa_log1p(double h) {
    if (h <= -1.0) throw usage_error("kappa_log1p requires h > -1");
    if (h == 0.0) return 1.0;
    double lp = std::log1p(h);
    if (lp == 0.0) return 1.0 / (1.0 + h); // limit form for denormal-small h
    return std::fabs(h / ((1.0 + h) * lp));
}

ProbeResult min_resolution_probe(const ScalarFn& f, double x0, const FormatSpec& fmt) {
    int precision;
    bool single;
    if (fmt == FormatSpec::binary64()) {
        precision = 53;
        single = false;
    } else if (fmt == FormatSpec::binary32()) {
        precision = 24;
        single = true;
    } else {
        throw usage_error("min_resolution_probe supports binary32/binary64 only");
    }
    double eps = std::ldexp(1.0, 1 - precision);
    double sqrt_eps = std::sqrt(eps);
    auto eval = [&](double x) -> double {
        double v = f(x);
        return single ? static_cast<double>(static_cast<float>(v)) : v;
    };
    double f0 = eval(single ? static_cast<double>(static_cast<float>(x0)) : x0);
    double scale = std::max(std::fabs(x0), 1.0);
    double h = scale * eps / 4.0;
    const double limit = scale; // past unit scale there is no plateau to speak of
    while (h < limit) {
        if (eval(x0 + h) != f0) return {h, sqrt_eps};
        h *= 1.02;
    }
    throw diagnostic_error("no plateau edge found; the function has no usable curvature at x0");
}

CatalogFunction catalog_function(const std::string& name, double parameter) {
    if (name == "ln")
        return {"ln", [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; },
                "natural logarithm"};
    if (name == "exp")
        return {"exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
                "exponential"};
    if (name == "add-const") {
        double c = parameter;
        return {"add-const", [c](double x) { return x + c; }, [](double) { return 1.0; },
                "x + c (cancellation near x = -c)"};
    }
    if (name == "pow") {
        double n = parameter;
        return {"pow", [n](double x) { return std::pow(x, n); },
                [n](double x) { return n * std::pow(x, n - 1.0); },
                "x^n (constant condition number n)"};
    }
    if (name == "log1p") {
        return {"log1p", [](double x) { return std::log1p(x); },
                [](double x) { return 1.0 / (1.0 + x); }, "log(1+h) in its stable form"};
    }
    throw usage_error("unknown catalog function: " + name);
}

std::vector<std::string> catalog_names() { return {"ln", "exp", "add-const", "pow", "log1p"}; }

} // namespace condition
} // namespace fpa
