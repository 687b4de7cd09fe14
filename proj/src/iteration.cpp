#include "ratroot/iteration.hpp"

#include "ratroot/errors.hpp"

namespace ratroot {

namespace {

void require_step_domain(const Rational& x, const Rational& r, int degree) {
    if (degree < 1) throw InvalidDegree();
    if (x.sign() <= 0) throw NonPositiveIterate();
    if (r.sign() <= 0) throw NonPositiveRadicand();
}

void validate_rule(const StoppingRule& rule) {
    if (rule.tolerance.sign() <= 0) throw InvalidArgument("tolerance must be positive");
    if (rule.max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
    if (rule.mode == StoppingRule::Mode::fixed_precision && rule.precision_digits < 1) {
        throw InvalidArgument("fixed-precision mode needs at least 1 digit");
    }
}

} // namespace

Rational sqrt_step(const Rational& x, const Rational& r) {
    require_step_domain(x, r, 2);
    return (x + r / x) / Rational(2);
}

Rational mth_root_step(const Rational& x, const Rational& r, int degree) {
    require_step_domain(x, r, degree);
    const auto m = static_cast<unsigned long>(degree);
    return (Rational(degree - 1) * x + r / pow(x, m - 1)) / Rational(degree);
}

Rational newton_step(const Polynomial& p, const Rational& x) {
    Rational slope = p.derivative().evaluate(x);
    if (slope.is_zero()) throw ZeroDerivative();
    return x - p.evaluate(x) / slope;
}

Rational fixed_point_residual(const Rational& x, const Rational& r, int degree) {
    return mth_root_step(x, r, degree) - x;
}

Polynomial root_polynomial(int degree, const Rational& radicand) {
    if (degree < 1) throw InvalidDegree();
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    coeffs[0] = -radicand;
    coeffs[static_cast<size_t>(degree)] = 1;
    return Polynomial(std::move(coeffs));
}

Rational default_initial_guess(const Rational& radicand, int degree) {
    if (degree < 1) throw InvalidDegree();
    if (radicand.sign() <= 0) throw NonPositiveRadicand();
    if (radicand < Rational(1)) return 1;
    BigInt floor_r = radicand.numerator() / radicand.denominator();
    // floor(log2(floor_r)), then divide by m rounding up
    auto exp2 = static_cast<long>(mpz_sizeinbase(floor_r.get_mpz_t(), 2)) - 1;
    auto shift = static_cast<unsigned long>((exp2 + degree - 1) / degree);
    BigInt guess = 1;
    guess <<= shift;
    return Rational(std::move(guess));
}

IterationTrace iterate(const RootProblem& problem) {
    const Rational& r = problem.radicand;
    const int m = problem.degree;
    if (m < 1) throw InvalidDegree();
    if (r.sign() < 0) throw NonPositiveRadicand();
    if (problem.initial_guess.sign() <= 0) throw NonPositiveIterate("initial guess must be positive");
    validate_rule(problem.stopping);

    IterationTrace trace;
    trace.problem = problem;

    if (r.is_zero()) {
        // the root is exactly 0 and the step map is undefined there
        trace.entries.push_back({1, Rational(0), Rational(0)});
        trace.converged = true;
        return trace;
    }

    const StoppingRule& rule = problem.stopping;
    Rational x = problem.initial_guess;
    for (int n = 1;; ++n) {
        Rational residual = pow(x, static_cast<unsigned long>(m)) - r;
        trace.entries.push_back({n, x, residual});
        if (abs(residual) <= rule.tolerance * r) {
            trace.converged = true;
            break;
        }
        if (n > rule.max_iter) break; // max_iter steps already taken
        Rational next = mth_root_step(x, r, m);
        if (rule.mode == StoppingRule::Mode::fixed_precision) {
            Rational truncated = truncate_decimal(next, rule.precision_digits);
            // keep positivity when the truncation grid is coarser than the root
            if (!truncated.is_zero()) next = truncated;
        }
        x = std::move(next);
    }
    return trace;
}

} // namespace ratroot
