#include "ratroot/convergence.hpp"

#include "ratroot/errors.hpp"

#include <cmath>

namespace ratroot {

ConvergenceReport analyze(const IterationTrace& trace, const Rational& reference,
                          int reference_digits) {
    if (trace.entries.empty()) throw InvalidArgument("trace has no iterates");
    if (reference.sign() <= 0) throw InvalidArgument("reference root must be positive");
    if (reference_digits < 1) throw InvalidArgument("reference_digits must be at least 1");

    ConvergenceReport report;
    report.converged = trace.converged;
    report.iterations_used = static_cast<int>(trace.entries.size());
    const Rational& r = trace.problem.radicand;
    report.final_relative_residual =
        r.is_zero() ? Rational(0) : abs(trace.final_entry().residual) / r;

    std::vector<Rational> errors;
    errors.reserve(trace.entries.size());
    for (const TraceEntry& entry : trace.entries) {
        errors.push_back(abs(entry.value - reference));
    }

    report.correct_digits_per_step.reserve(errors.size());
    for (const Rational& e : errors) {
        if (e.is_zero()) {
            report.correct_digits_per_step.push_back(reference_digits);
        } else {
            report.correct_digits_per_step.push_back(
                static_cast<long>(std::floor(-log10_magnitude(e / reference))));
        }
    }

    // errors closer to the reference root than its own accuracy (with a
    // 10^3 safety factor) are measurement noise, not data
    const Rational resolution_floor =
        reference * Rational(BigInt(1), pow10(static_cast<unsigned long>(
                                            std::max(1, reference_digits - 3))));
    const Rational basin = reference / Rational(2);
    for (size_t i = errors.size(); i-- > 2;) {
        const Rational& e0 = errors[i - 2];
        const Rational& e1 = errors[i - 1];
        const Rational& e2 = errors[i];
        if (e2.is_zero() || e1.is_zero() || e0.is_zero()) continue;
        if (!(e2 < e1 && e1 < e0)) continue;
        if (e2 < resolution_floor) continue;
        if (e0 > basin) continue;
        report.observed_order = log10_magnitude(e2 / e1) / log10_magnitude(e1 / e0);
        break;
    }
    return report;
}

namespace {

BigInt int_pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

} // namespace

Rational reference_root(const Rational& radicand, int degree, int digits) {
    if (degree < 1) throw InvalidDegree();
    if (radicand.sign() <= 0) throw NonPositiveRadicand();
    if (digits < 1) throw InvalidArgument("digits must be at least 1");

    // q = floor(10^d * root) has relative residual below m * 10^-d / root, so
    // pad d for the degree and, when r < 1, for the root's leading zeros
    int pad = 0;
    if (radicand < Rational(1)) {
        auto leading = static_cast<long>(std::ceil(-log10_magnitude(radicand))) + 1;
        pad = static_cast<int>((leading + degree - 1) / degree) + 1;
    }
    int guard = 2 + static_cast<int>(std::to_string(degree).size()) + pad;

    const auto m = static_cast<unsigned long>(degree);
    const Rational bound = radicand / Rational(pow10(static_cast<unsigned long>(digits)));
    for (int d = digits + guard;; d += 8) {
        BigInt scale = pow10(static_cast<unsigned long>(d));
        BigInt target = radicand.numerator() * int_pow(scale, m);
        const BigInt& den = radicand.denominator();

        BigInt hi = 1;
        while (int_pow(hi, m) * den <= target) hi <<= 1;
        BigInt lo = hi >> 1; // lo satisfies lo^m * den <= target (0 always does)
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) >> 1;
            if (int_pow(mid, m) * den <= target) {
                lo = std::move(mid);
            } else {
                hi = std::move(mid);
            }
        }
        Rational q(std::move(lo), std::move(scale));
        if (abs(pow(q, m) - radicand) <= bound) return q;
    }
}

} // namespace ratroot
