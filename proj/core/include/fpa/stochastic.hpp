// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/formats.hpp"
#include "fpa/rng.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace fpa {
namespace stochastic {

// Perturbation policy: either a fair coin between the two faithful
// neighbors per inexact operation, or one fixed directed mode. Exact
// operations are never perturbed under any policy.
struct Policy {
    enum class Kind { RandomUpDown, Directed };
    Kind kind = Kind::RandomUpDown;
    RoundingMode mode = RoundingMode::NearestEven;

    static Policy random_up_down() { return {Kind::RandomUpDown, RoundingMode::NearestEven}; }
    static Policy directed(RoundingMode m) { return {Kind::Directed, m}; }
};

Policy policy_from_name(const std::string& name); // usage_error on unknown

// One evaluation's rounding context: the policy plus a private random
// stream. All perturbation decisions flow through here.
class PerturbContext {
public:
    PerturbContext(Policy policy, SplitMix64 stream) : policy_(policy), stream_(stream) {}

    double add(double a, double b);
    double sub(double a, double b);
    double mul(double a, double b);
    double div(double a, double b);
    double sqrt(double x);

    double binop(double a, double b, char op); // one of '+', '-', '*', '/'

    const Policy& policy() const { return policy_; }

private:
    // tsign: sign of (exact result - rounded result); 0 marks an exact op.
    double perturb(double nearest, int tsign);

    Policy policy_;
    SplitMix64 stream_;
};

// A double that routes its arithmetic through a PerturbContext. Values
// without a context (plain constants) behave like ordinary doubles until
// they meet an instrumented operand.
class InstrumentedValue {
public:
    InstrumentedValue() = default;
    explicit InstrumentedValue(double v) : v_(v) {}
    InstrumentedValue(double v, PerturbContext* ctx) : v_(v), ctx_(ctx) {}

    double value() const { return v_; }

    friend InstrumentedValue operator+(const InstrumentedValue& a, const InstrumentedValue& b) {
        PerturbContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
        return {ctx ? ctx->add(a.v_, b.v_) : a.v_ + b.v_, ctx};
    }
    friend InstrumentedValue operator-(const InstrumentedValue& a, const InstrumentedValue& b) {
        PerturbContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
        return {ctx ? ctx->sub(a.v_, b.v_) : a.v_ - b.v_, ctx};
    }
    friend InstrumentedValue operator*(const InstrumentedValue& a, const InstrumentedValue& b) {
        PerturbContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
        return {ctx ? ctx->mul(a.v_, b.v_) : a.v_ * b.v_, ctx};
    }
    friend InstrumentedValue operator/(const InstrumentedValue& a, const InstrumentedValue& b) {
        PerturbContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
        return {ctx ? ctx->div(a.v_, b.v_) : a.v_ / b.v_, ctx};
    }
    InstrumentedValue operator-() const { return {-v_, ctx_}; } // sign flip is exact

    friend InstrumentedValue sqrt(const InstrumentedValue& x);
    friend InstrumentedValue fabs(const InstrumentedValue& x) {
        return {x.v_ < 0 ? -x.v_ : x.v_, x.ctx_};
    }

    friend bool operator<(const InstrumentedValue& a, const InstrumentedValue& b) { return a.v_ < b.v_; }
    friend bool operator>(const InstrumentedValue& a, const InstrumentedValue& b) { return a.v_ > b.v_; }
    friend bool operator<=(const InstrumentedValue& a, const InstrumentedValue& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const InstrumentedValue& a, const InstrumentedValue& b) { return a.v_ >= b.v_; }
    friend bool operator==(const InstrumentedValue& a, const InstrumentedValue& b) { return a.v_ == b.v_; }

private:
    double v_ = 0;
    PerturbContext* ctx_ = nullptr;
};

double perturbed_binop(double a, double b, char op, Policy policy, SplitMix64& stream);

struct StochasticReport {
    std::size_t n_samples = 0;
    std::vector<double> results;
    double mean = 0;
    double stddev = 0;
    double significant_digits = 0; // -log10(stddev/|mean|), clamped to [0, cap]
    std::uint64_t seed = 0;
    std::size_t flagged = 0; // samples that came out non-finite
};

using Computation = std::function<double(PerturbContext&)>;

// n independent RandomUpDown evaluations with per-sample substreams of
// `seed`; statistics cover the finite samples (non-finite ones are kept in
// `results` and counted in `flagged`).
StochasticReport run_stochastic(const Computation& computation, std::size_t n, std::uint64_t seed,
                                double digit_cap = 15.954589770191003); // log10(2^53)

struct DirectedRun {
    RoundingMode mode;
    double result;
};

// One run per directed mode; the spread of the results measures the
// computation's resilience.
std::vector<DirectedRun> run_directed_suite(const Computation& computation);
double directed_spread(const std::vector<DirectedRun>& runs); // max - min over finite results

} // namespace stochastic
} // namespace fpa
