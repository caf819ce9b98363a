#pragma once

#include "fracbvp/grid.hpp"
#include "fracbvp/rational.hpp"

namespace fracbvp {

/// A fractional order v > 0 together with the unique integer N satisfying
/// 0 <= N-1 < v <= N (the ceiling of v).
struct FracOrder {
    Rational v;
    int integer_order;  // N

    explicit FracOrder(const Rational& order);
};

/// Iterated forward difference: (Df)(t) = f(t+1) - f(t), applied `order`
/// times. The result keeps the base and loses `order` points at the end.
GridFunction forward_difference(const GridFunction& f, int order);

/// Fractional sum of order v >= 0:
///
///   (S_v f)(t) = (1/Gamma(v)) * sum_{s=a}^{t-v} (t-s-1)^(v-1) f(s)
///
/// for f on the grid based at a. The result lives on base a+v with the same
/// length; order 0 is the identity. Throws DomainError for v < 0.
GridFunction fractional_sum(const GridFunction& f, const Rational& v);

/// Fractional sum evaluated at a single point t in {a+v+k : k integer}.
/// Points below the result base (empty sums) evaluate to 0.
double fractional_sum_at(const GridFunction& f, const Rational& v,
                         const Rational& t);

/// Fractional difference of order v > 0: the N-th forward difference of the
/// order (N-v) fractional sum, N = ceil(v). For integer v this collapses to
/// the plain N-th difference. The result base is a + (N - v).
GridFunction fractional_difference(const GridFunction& f, const Rational& v);

/// Defect of the sum-then-difference composition for 1 < v < 2 on grids
/// based at v-2: S_v(D_v y) - y must lie in span{t^(v-1), t^(v-2)}. Returns
/// the max-norm residual after least-squares projection onto that span.
double composition_span_residual(const GridFunction& y, const Rational& v);

}  // namespace fracbvp
