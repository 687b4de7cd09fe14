#pragma once

#include "ratroot/rational.hpp"

#include <cstdint>
#include <random>

// Deterministic draw helpers. mt19937_64 output is pinned by the standard, so
// seeded tests reproduce bit-for-bit across toolchains; the modulo bias is
// irrelevant at these ranges.
namespace testsupport {

using ratroot::BigInt;
using ratroot::Rational;

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Uniform value on the 10^-6 grid of [10^-6, 10^6].
inline Rational uniform_value(std::mt19937_64& rng) {
    unsigned long k = 1 + draw(rng, 1000000000000ull);
    return Rational(BigInt(k), ratroot::pow10(6));
}

/// Positive rational spread log-uniformly across the decades [10^-6, 10^6):
/// a 6-digit mantissa in [1, 10) times a uniform power of ten.
inline Rational log_uniform(std::mt19937_64& rng) {
    long decade = draw_in(rng, -6, 5);
    unsigned long mantissa = 100000 + draw(rng, 900000);
    Rational m(BigInt(mantissa), ratroot::pow10(5));
    if (decade >= 0) return m * Rational(ratroot::pow10(static_cast<unsigned long>(decade)));
    return m / Rational(ratroot::pow10(static_cast<unsigned long>(-decade)));
}

/// Signed rational with numerator in [-10^6, 10^6] and denominator in [1, 10^6].
inline Rational small_rational(std::mt19937_64& rng) {
    long num = draw_in(rng, -1000000, 1000000);
    long den = draw_in(rng, 1, 1000000);
    return Rational(BigInt(num), BigInt(den));
}

/// Positive variant of small_rational.
inline Rational small_positive(std::mt19937_64& rng) {
    long num = draw_in(rng, 1, 1000000);
    long den = draw_in(rng, 1, 1000000);
    return Rational(BigInt(num), BigInt(den));
}

} // namespace testsupport
