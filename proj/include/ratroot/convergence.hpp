#pragma once

#include "ratroot/iteration.hpp"
#include "ratroot/rational.hpp"

#include <optional>
#include <vector>

namespace ratroot {

/// Post-hoc summary of an iteration trace measured against a reference root.
struct ConvergenceReport {
    bool converged = false;
    int iterations_used = 0;                  // number of iterates in the trace
    Rational final_relative_residual;         // |x_N^m - r| / r (0 when r = 0)
    std::optional<double> observed_order;     // empty = undetermined
    std::vector<long> correct_digits_per_step; // floor(-log10(e_n / reference))
};

/// Measures iterate errors e_n = |x_n - reference| exactly and estimates the
/// order of convergence as log(e_{n+1}/e_n) / log(e_n/e_{n-1}) over the last
/// triple of strictly decreasing errors that starts inside the quadratic
/// basin (e_{n-1} <= reference/2) and stays above the reference root's own
/// resolution. With fewer than three such iterates the order is left
/// undetermined rather than failing the run.
///
/// reference_digits states how many relative decimal digits of the reference
/// root are trustworthy; errors below ~10^(3-reference_digits) * reference
/// cannot be measured and are excluded. Exact hits (e_n = 0) report
/// reference_digits correct digits, the most the oracle can certify.
ConvergenceReport analyze(const IterationTrace& trace, const Rational& reference,
                          int reference_digits);

/// Method-independent reference root: a rational q with
/// |q^m - r| <= 10^(-digits) * r, found by bisection over scaled integers
/// (largest k with k^m * den(r) <= num(r) * 10^(m*d)). Deliberately does not
/// reuse the Newton-style step it is used to judge.
Rational reference_root(const Rational& radicand, int degree, int digits);

} // namespace ratroot
