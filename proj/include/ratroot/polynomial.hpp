#pragma once

#include "ratroot/rational.hpp"

#include <vector>

namespace ratroot {

/// Dense univariate polynomial with exact rational coefficients.
/// coefficient(i) holds the coefficient of x^i. The stored coefficient list
/// never ends in a zero; the zero polynomial stores nothing and reports
/// degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Zero for any power beyond the degree.
    const Rational& coefficient(int power) const;

    /// Exact Horner evaluation.
    Rational evaluate(const Rational& x) const;

    /// Exact formal derivative; the zero polynomial maps to itself.
    Polynomial derivative() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  private:
    std::vector<Rational> coeffs_;
};

} // namespace ratroot
