#include "ratroot/rational.hpp"

#include "ratroot/errors.hpp"

#include <cmath>
#include <ostream>

namespace ratroot {

namespace {

bool all_decimal_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

BigInt parse_digits(std::string_view text, std::string_view whole) {
    if (!all_decimal_digits(text)) {
        throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
    }
    return BigInt(std::string(text), 10);
}

} // namespace

BigInt pow10(unsigned long exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw ParseError("empty number");

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_digits(body.substr(0, slash), text);
        BigInt den = parse_digits(body.substr(slash + 1), text);
        value = Rational(std::move(num), std::move(den));
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        BigInt ip = parse_digits(int_part, text);
        BigInt fp = parse_digits(frac_part, text);
        BigInt scale = pow10(frac_part.size());
        value = Rational(ip * scale + fp, std::move(scale));
    } else {
        value = Rational(parse_digits(body, text));
    }
    return negative ? -value : value;
}

Rational Rational::operator-() const {
    return Rational(CoprimeTag{}, -num_, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::fraction_string() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

std::string Rational::decimal_string(int digits) const {
    if (digits < 0) throw InvalidArgument("digit count must be non-negative");
    BigInt magnitude = ::abs(num_);
    BigInt int_part = magnitude / den_;
    std::string s = sign() < 0 ? "-" : "";
    s += int_part.get_str();
    if (digits > 0) {
        BigInt remainder = magnitude - int_part * den_;
        BigInt frac = (remainder * pow10(static_cast<unsigned long>(digits))) / den_;
        std::string f = frac.get_str();
        s += '.';
        s.append(static_cast<size_t>(digits) - f.size(), '0');
        s += f;
    }
    return s;
}

Rational abs(const Rational& value) {
    return value.sign() < 0 ? -value : value;
}

Rational pow(const Rational& base, unsigned long exponent) {
    if (base.is_zero() && exponent == 0) throw UndefinedPower();
    // coprime numerator/denominator stay coprime under powers, so the
    // canonical form is preserved without another gcd
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(Rational::CoprimeTag{}, std::move(n), std::move(d));
}

Rational truncate_decimal(const Rational& value, int digits) {
    if (digits < 0) throw InvalidArgument("digit count must be non-negative");
    BigInt scale = pow10(static_cast<unsigned long>(digits));
    BigInt scaled = (value.numerator() * scale) / value.denominator(); // tdiv: toward zero
    return Rational(std::move(scaled), std::move(scale));
}

double log10_magnitude(const Rational& value) {
    static constexpr double log10_2 = 0.30102999566398119521;
    long num_exp = 0;
    long den_exp = 0;
    double num_mant = mpz_get_d_2exp(&num_exp, value.numerator().get_mpz_t());
    double den_mant = mpz_get_d_2exp(&den_exp, value.denominator().get_mpz_t());
    double bits = (std::log2(std::fabs(num_mant)) + static_cast<double>(num_exp)) -
                  (std::log2(den_mant) + static_cast<double>(den_exp));
    return bits * log10_2;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.fraction_string();
}

} // namespace ratroot
