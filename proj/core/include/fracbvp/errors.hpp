#pragma once

#include <stdexcept>
#include <string>

namespace fracbvp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Gamma-function argument landed on (or within 1e-12 of) a nonpositive
/// integer, and the pole conventions do not apply.
class PoleError : public Error {
public:
    using Error::Error;
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A grid is too short for the requested difference order.
class InsufficientGrid : public Error {
public:
    using Error::Error;
};

/// The Green's-function denominator vanishes (or nearly so); the
/// representation formula is unusable for this shape.
class DegenerateProblem : public Error {
public:
    using Error::Error;
};

/// The direct linear solve hit a pivot below threshold.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Fixed-point iteration hit the iteration cap without meeting the
/// convergence test.
class NonConvergence : public Error {
public:
    NonConvergence(int iterations, double last_delta)
        : Error("fixed-point iteration did not converge after " +
                std::to_string(iterations) +
                " iterations (last step " + std::to_string(last_delta) + ")"),
          iterations(iterations),
          last_delta(last_delta) {}

    int iterations;
    double last_delta;
};

/// A function evaluation produced a non-finite value.
class NonfiniteValue : public Error {
public:
    using Error::Error;
};

/// The limit-ratio sampler could not classify a limit.
class UnstableLimit : public Error {
public:
    using Error::Error;
};

/// A config file is syntactically malformed at a given line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line) {}

    int line;
};

/// A config file parsed but a field fails validation.
class ValidationError : public Error {
public:
    ValidationError(std::string field_name, const std::string& reason)
        : Error(field_name + ": " + reason), field(std::move(field_name)) {}

    std::string field;
};

}  // namespace fracbvp
