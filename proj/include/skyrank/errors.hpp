#pragma once

#include <stdexcept>
#include <string>

namespace skyrank {

/// Base class for all library errors. `exit_code()` maps the error family
/// onto the CLI exit-code contract: 1 = data error, 2 = usage error,
/// 3 = convergence error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

/// Malformed input text (bad number, bad CSV cell); message names the location.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input structure does not match the declared schema (columns vs preferences).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Duplicate or invalid row identifiers.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// A value violates a mathematical precondition (e.g. inversion of zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that an operation cannot process (zero column
/// sum, null vector).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Internal invariant violated; indicates a bug, not bad input.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Caller passed an out-of-range or unknown parameter.
class ParameterError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// An iterative method exhausted its iteration budget.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    int exit_code() const noexcept override { return 3; }
    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

}  // namespace skyrank
