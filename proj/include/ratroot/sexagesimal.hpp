#pragma once

#include "ratroot/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ratroot {

/// Base-60 positional numeral in Neugebauer notation: integer digits and
/// fractional digits, each in [0, 59], most significant first, rendered as
/// e.g. "1;24,51,10" with ';' marking the integer/fraction boundary.
struct SexagesimalNumeral {
    bool negative = false;
    std::vector<int> integer_digits{0}; // no leading zero unless exactly {0}
    std::vector<int> fraction_digits{};

    friend bool operator==(const SexagesimalNumeral& a, const SexagesimalNumeral& b) = default;
};

/// Truncation toward zero to `places` fractional base-60 digits; exact when
/// value * 60^places is an integer. The fraction always carries exactly
/// `places` digits.
SexagesimalNumeral to_sexagesimal(const Rational& value, int places);

/// Exact value of the numeral. Throws InvalidDigit for digits outside [0, 59].
Rational from_sexagesimal(const SexagesimalNumeral& numeral);

/// "4;7,30", "-1;24,51,10"; an empty fraction prints without the semicolon.
std::string to_string(const SexagesimalNumeral& numeral);

/// Parses the grammar ['-'] digits [';' digits] with digits a comma-separated
/// list of decimal integers in [0, 59]. Throws ParseError on malformed text
/// and InvalidDigit on out-of-range digits.
SexagesimalNumeral parse_sexagesimal(std::string_view text);

} // namespace ratroot
