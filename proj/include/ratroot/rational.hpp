#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ratroot {

/// Arbitrary-precision signed integer (GMP-backed).
using BigInt = mpz_class;

/// 10^exponent as a BigInt.
BigInt pow10(unsigned long exponent);

/// Signed rational number kept in canonical lowest terms at all times:
/// denominator > 0, gcd(|numerator|, denominator) = 1, zero stored as 0/1.
/// Equality is therefore a structural check on the two integers.
///
/// Values are immutable through the public surface and every operation is a
/// pure function, so concurrent use needs no synchronization.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {} // NOLINT: implicit by design
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

    /// Throws DivisionByZero when denominator = 0. Any sign combination is
    /// accepted; the result is reduced and sign-normalized.
    Rational(BigInt numerator, BigInt denominator);

    /// Accepts "17", "-17", "33/8", "4.125" (read exactly as 4125/1000 and
    /// reduced). Mixed numbers ("4 1/8") and exponent notation are rejected.
    static Rational from_string(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    int sign() const { return sgn(num_); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws DivisionByZero when b = 0.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& other) { return *this = *this + other; }
    Rational& operator-=(const Rational& other) { return *this = *this - other; }
    Rational& operator*=(const Rational& other) { return *this = *this * other; }
    Rational& operator/=(const Rational& other) { return *this = *this / other; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    /// Total order matching the real-number order (cross-multiplication).
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "33/8", "4", "-1/2". Integers print without a denominator.
    std::string fraction_string() const;

    /// Decimal expansion truncated toward zero to `digits` fractional digits,
    /// zero-padded, no rounding; leading '-' for negative values. digits = 0
    /// prints the truncated integer part only. Supports digit counts well
    /// beyond 1000.
    std::string decimal_string(int digits) const;

  private:
    struct CoprimeTag {};
    Rational(CoprimeTag, BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}

    void reduce();

    friend Rational pow(const Rational& base, unsigned long exponent);

    BigInt num_;
    BigInt den_;
};

Rational abs(const Rational& value);

/// Exact k-th power. Throws UndefinedPower for 0^0.
Rational pow(const Rational& base, unsigned long exponent);

/// Truncation toward zero to `digits` fractional decimal digits:
/// trunc(value * 10^digits) / 10^digits.
Rational truncate_decimal(const Rational& value, int digits);

/// log10 of |value| as a double, usable far outside double's exponent range.
/// value must be nonzero.
double log10_magnitude(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace ratroot
