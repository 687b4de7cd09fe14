#pragma once

#include "ratroot/polynomial.hpp"
#include "ratroot/rational.hpp"

#include <vector>

namespace ratroot {

/// Termination policy for the iteration driver. A trace is converged once the
/// relative residual satisfies |x^m - r| <= tolerance * r, decided in exact
/// rational arithmetic. In fixed_precision mode every computed iterate is
/// truncated toward zero to precision_digits fractional decimal digits, which
/// bounds the otherwise multiplicative growth of numerator/denominator sizes.
struct StoppingRule {
    enum class Mode { exact, fixed_precision };

    Rational tolerance = Rational(BigInt(1), pow10(30));
    int max_iter = 500; // maximum number of step applications
    Mode mode = Mode::exact;
    int precision_digits = 50; // used by fixed_precision only
};

/// An m-th root extraction problem: find x with x^m = radicand, starting the
/// iteration from initial_guess.
struct RootProblem {
    Rational radicand;           // r >= 0
    int degree = 2;              // m >= 1
    Rational initial_guess = 1;  // x1 > 0
    StoppingRule stopping;
};

struct TraceEntry {
    int index;         // 1-based
    Rational value;    // x_n
    Rational residual; // x_n^m - r
};

/// The full iterate sequence x1..xN with exact residuals. Each stored value
/// is reproducible by applying the step map (plus truncation, in
/// fixed_precision mode) to its predecessor. `converged` is false when
/// max_iter ran out first; the partial trace is still complete up to that
/// point.
struct IterationTrace {
    RootProblem problem;
    std::vector<TraceEntry> entries;
    bool converged = false;

    const TraceEntry& final_entry() const { return entries.back(); }
};

/// One Babylonian step: (x + r/x) / 2.
/// Throws NonPositiveIterate / NonPositiveRadicand on x <= 0 / r <= 0.
Rational sqrt_step(const Rational& x, const Rational& r);

/// One generalized step: ((m-1)*x + r/x^(m-1)) / m.
/// m = 1 returns r in a single step; m = 2 coincides with sqrt_step.
/// Throws NonPositiveIterate, NonPositiveRadicand, InvalidDegree.
Rational mth_root_step(const Rational& x, const Rational& r, int degree);

/// x - p(x)/p'(x). Throws ZeroDerivative when p'(x) = 0.
Rational newton_step(const Polynomial& p, const Rational& x);

/// mth_root_step(x, r, m) - x; zero exactly when x^m = r.
Rational fixed_point_residual(const Rational& x, const Rational& r, int degree);

/// The polynomial x^m - r, whose positive root the iteration approximates.
Polynomial root_polynomial(int degree, const Rational& radicand);

/// Starting value used when the caller does not supply one: 1 for r < 1,
/// otherwise 2^ceil(floor(log2(floor(r)))/m), which lands within a factor of
/// two of the true root.
Rational default_initial_guess(const Rational& radicand, int degree);

/// Runs mth_root_step from the initial guess until the stopping rule fires or
/// max_iter steps have been taken. The trace always contains the initial
/// guess. radicand = 0 short-circuits to the one-entry trace [0], since the
/// step map divides by x^(m-1) and the root is exactly zero.
IterationTrace iterate(const RootProblem& problem);

} // namespace ratroot
