#include "ratroot/polynomial.hpp"

namespace ratroot {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coefficient(int power) const {
    static const Rational zero;
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(power)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<Rational> out;
    out.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
}

} // namespace ratroot
