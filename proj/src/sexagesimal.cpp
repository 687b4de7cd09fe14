#include "ratroot/sexagesimal.hpp"

#include "ratroot/errors.hpp"

namespace ratroot {

namespace {

BigInt pow60(unsigned long exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 60, exponent);
    return out;
}

void require_digit(int digit) {
    if (digit < 0 || digit > 59) {
        throw InvalidDigit("sexagesimal digit " + std::to_string(digit) + " outside [0, 59]");
    }
}

std::vector<int> parse_digit_list(std::string_view text) {
    std::vector<int> digits;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view token =
            comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (token.empty() || token.size() > 2) throw ParseError("bad sexagesimal digit group");
        int value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw ParseError("bad sexagesimal digit group");
            value = value * 10 + (c - '0');
        }
        require_digit(value);
        digits.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return digits;
}

} // namespace

SexagesimalNumeral to_sexagesimal(const Rational& value, int places) {
    if (places < 0) throw InvalidArgument("places must be non-negative");
    SexagesimalNumeral numeral;
    numeral.negative = value.sign() < 0;

    BigInt magnitude = ::abs(value.numerator());
    BigInt int_part = magnitude / value.denominator();
    BigInt remainder = magnitude - int_part * value.denominator();

    numeral.integer_digits.clear();
    while (int_part > 0) {
        BigInt q, rem;
        mpz_tdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), int_part.get_mpz_t(), 60);
        numeral.integer_digits.insert(numeral.integer_digits.begin(),
                                      static_cast<int>(rem.get_ui()));
        int_part = std::move(q);
    }
    if (numeral.integer_digits.empty()) numeral.integer_digits.push_back(0);

    BigInt frac = (remainder * pow60(static_cast<unsigned long>(places))) / value.denominator();
    numeral.fraction_digits.assign(static_cast<size_t>(places), 0);
    for (int j = places; j-- > 0;) {
        BigInt q, rem;
        mpz_tdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), frac.get_mpz_t(), 60);
        numeral.fraction_digits[static_cast<size_t>(j)] = static_cast<int>(rem.get_ui());
        frac = std::move(q);
    }
    return numeral;
}

Rational from_sexagesimal(const SexagesimalNumeral& numeral) {
    BigInt int_value = 0;
    for (int digit : numeral.integer_digits) {
        require_digit(digit);
        int_value = int_value * 60 + digit;
    }
    BigInt frac_value = 0;
    for (int digit : numeral.fraction_digits) {
        require_digit(digit);
        frac_value = frac_value * 60 + digit;
    }
    BigInt scale = pow60(numeral.fraction_digits.size());
    Rational value(int_value * scale + frac_value, std::move(scale));
    return numeral.negative ? -value : value;
}

std::string to_string(const SexagesimalNumeral& numeral) {
    std::string s = numeral.negative ? "-" : "";
    for (size_t i = 0; i < numeral.integer_digits.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(numeral.integer_digits[i]);
    }
    if (!numeral.fraction_digits.empty()) {
        s += ';';
        for (size_t i = 0; i < numeral.fraction_digits.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(numeral.fraction_digits[i]);
        }
    }
    return s;
}

SexagesimalNumeral parse_sexagesimal(std::string_view text) {
    SexagesimalNumeral numeral;
    if (!text.empty() && text.front() == '-') {
        numeral.negative = true;
        text.remove_prefix(1);
    }
    if (text.empty()) throw ParseError("empty sexagesimal numeral");

    size_t semi = text.find(';');
    std::string_view int_text = semi == std::string_view::npos ? text : text.substr(0, semi);
    numeral.integer_digits = parse_digit_list(int_text);
    if (semi != std::string_view::npos) {
        numeral.fraction_digits = parse_digit_list(text.substr(semi + 1));
    }
    // normalize: strip leading zeros the grammar may carry ("0,5;30" = "5;30")
    while (numeral.integer_digits.size() > 1 && numeral.integer_digits.front() == 0) {
        numeral.integer_digits.erase(numeral.integer_digits.begin());
    }
    return numeral;
}

} // namespace ratroot
