#pragma once

#include "fracbvp/rational.hpp"

namespace fracbvp {

/// Generalized falling factorial Gamma(t+1) / Gamma(t+1-v).
///
/// Conventions, resolved on the exact rational arguments:
///   - if t+1-v is a nonpositive integer and t+1 is not, the value is 0
///     (the denominator Gamma blows up, the numerator stays finite);
///   - a nonnegative integer v is evaluated as the exact product
///     t (t-1) ... (t-v+1), which also covers the case where numerator and
///     denominator are both poles;
///   - order 0 is the empty product, 1, for every t;
///   - a negative integer v is the reciprocal rising product
///     1 / ((t+1)(t+2)...(t-v)).
///
/// Throws PoleError when t+1 is a nonpositive integer while t+1-v is not:
/// the ratio is genuinely infinite.
double falling_factorial(const Rational& t, const Rational& v);

}  // namespace fracbvp
