#pragma once

#include <stdexcept>
#include <string>

namespace wrightkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero denominator, overflow of a 64-bit component, malformed rational text.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Parameters outside every supported representation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series hit its term cap or produced a non-finite term.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at (or within 1e-12 of) a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the window a kernel function is defined on.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Bessel K requested at an integer order.
class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

/// Invalid hypergeometric parameter list.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Unknown suite name or malformed request at the tool boundary.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace wrightkit
