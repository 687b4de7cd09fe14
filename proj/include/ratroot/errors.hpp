#pragma once

#include <stdexcept>
#include <string>

namespace ratroot {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& message) : Error(message) {}
};

class UndefinedPower : public Error {
  public:
    UndefinedPower() : Error("0^0 is undefined") {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& message) : Error(message) {}
};

class NonPositiveIterate : public Error {
  public:
    NonPositiveIterate() : Error("iterate must be positive") {}
    explicit NonPositiveIterate(const std::string& message) : Error(message) {}
};

class NonPositiveRadicand : public Error {
  public:
    NonPositiveRadicand() : Error("radicand must be positive") {}
    explicit NonPositiveRadicand(const std::string& message) : Error(message) {}
};

class InvalidDegree : public Error {
  public:
    InvalidDegree() : Error("root degree must be at least 1") {}
};

class ZeroDerivative : public Error {
  public:
    ZeroDerivative() : Error("derivative vanishes at the iterate; Newton step undefined") {}
};

class InvalidDigit : public Error {
  public:
    explicit InvalidDigit(const std::string& message) : Error(message) {}
};

/// Contract violation not covered by a more specific error (bad stopping
/// rule, negative digit count, and similar).
class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string& message) : Error(message) {}
};

} // namespace ratroot
