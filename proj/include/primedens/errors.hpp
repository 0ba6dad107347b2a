#pragma once

#include <stdexcept>
#include <string>

namespace primedens {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or malformed user input (limits, tuples, polynomials).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A query or computation needs data beyond what a PrimeTable holds.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation (x <= 1, p not prime).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic would overflow.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

} // namespace primedens
