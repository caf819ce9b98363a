#include "fracbvp/frac_calc.hpp"

#include <vector>

#include "fracbvp/errors.hpp"
#include "fracbvp/falling_factorial.hpp"
#include "fracbvp/gamma.hpp"

namespace fracbvp {

FracOrder::FracOrder(const Rational& order) : v(order) {
    if (order <= Rational(0))
        throw DomainError("fractional order must be positive, got " + order.str());
    integer_order = static_cast<int>(order.ceil());
}

GridFunction forward_difference(const GridFunction& f, int order) {
    if (order < 1) throw DomainError("difference order must be >= 1");
    if (f.length() <= order)
        throw InsufficientGrid("grid of length " + std::to_string(f.length()) +
                               " cannot take an order-" + std::to_string(order) +
                               " difference");
    std::vector<double> values(f.values().begin(), f.values().end());
    for (int pass = 0; pass < order; ++pass) {
        for (size_t i = 0; i + 1 < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return GridFunction(Grid(f.grid().base(), f.length() - order),
                        std::move(values));
}

namespace {

// Normalized convolution kernel u_m = (v-1+m)^(v-1) / Gamma(v), m = 0..count.
// Each value goes through falling_factorial so the pole conventions apply;
// u_0 divides Gamma(v) by itself and is exactly 1, which makes the first
// point of a fractional sum reproduce f(a) exactly.
std::vector<double> normalized_kernel(const Rational& v, int count) {
    const double gamma_v = gamma_value(v.to_double());
    std::vector<double> u;
    u.reserve(static_cast<size_t>(count));
    for (int m = 0; m < count; ++m)
        u.push_back(falling_factorial(v - Rational(1) + Rational(m), v - Rational(1)) /
                    gamma_v);
    return u;
}

}  // namespace

GridFunction fractional_sum(const GridFunction& f, const Rational& v) {
    if (v < Rational(0))
        throw DomainError("fractional sum order must be >= 0, got " + v.str());
    if (v.is_zero()) return f;  // order-0 sum is the identity

    const int n = f.length();
    const std::vector<double> u = normalized_kernel(v, n);
    std::vector<double> values(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += u[static_cast<size_t>(k - j)] * f[j];
        values[static_cast<size_t>(k)] = acc;
    }
    return GridFunction(Grid(f.grid().base() + v, n), std::move(values));
}

double fractional_sum_at(const GridFunction& f, const Rational& v,
                         const Rational& t) {
    if (v <= Rational(0))
        throw DomainError("fractional sum order must be > 0, got " + v.str());
    const Rational offset = t - (f.grid().base() + v);
    if (!offset.is_integer())
        throw DomainError("point " + t.str() + " is not on the shifted grid");
    const std::int64_t k = offset.num();
    if (k < 0) return 0.0;  // upper limit below lower: empty sum
    if (k >= f.length())
        throw DomainError("point " + t.str() + " needs samples beyond the grid");

    const std::vector<double> u = normalized_kernel(v, static_cast<int>(k) + 1);
    double acc = 0.0;
    for (std::int64_t j = 0; j <= k; ++j)
        acc += u[static_cast<size_t>(k - j)] * f[static_cast<int>(j)];
    return acc;
}

GridFunction fractional_difference(const GridFunction& f, const Rational& v) {
    const FracOrder order(v);
    const int n_steps = order.integer_order;
    if (f.length() <= n_steps)
        throw InsufficientGrid("grid of length " + std::to_string(f.length()) +
                               " cannot take an order-" + v.str() +
                               " fractional difference");
    return forward_difference(fractional_sum(f, Rational(n_steps) - v), n_steps);
}

double composition_span_residual(const GridFunction& y, const Rational& v) {
    if (v <= Rational(1) || v >= Rational(2))
        throw DomainError("composition span check needs v in (1, 2)");

    const GridFunction composed = fractional_sum(fractional_difference(y, v), v);
    // composed lives on base a+2, covering y's points from index 2 on.
    const int n = composed.length();
    std::vector<double> defect(static_cast<size_t>(n));
    std::vector<double> basis1(static_cast<size_t>(n)), basis2(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Rational t = composed.grid().point(j);
        defect[static_cast<size_t>(j)] = composed[j] - y[j + 2];
        basis1[static_cast<size_t>(j)] = falling_factorial(t, v - Rational(1));
        basis2[static_cast<size_t>(j)] = falling_factorial(t, v - Rational(2));
    }

    // Least squares onto the two basis columns via the 2x2 normal equations.
    double a11 = 0, a12 = 0, a22 = 0, r1 = 0, r2 = 0;
    for (int j = 0; j < n; ++j) {
        const double b1 = basis1[static_cast<size_t>(j)];
        const double b2 = basis2[static_cast<size_t>(j)];
        const double d = defect[static_cast<size_t>(j)];
        a11 += b1 * b1;
        a12 += b1 * b2;
        a22 += b2 * b2;
        r1 += b1 * d;
        r2 += b2 * d;
    }
    const double det = a11 * a22 - a12 * a12;
    if (det == 0.0) throw DomainError("span basis is numerically degenerate");
    const double c1 = (r1 * a22 - r2 * a12) / det;
    const double c2 = (a11 * r2 - a12 * r1) / det;

    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        worst = std::max(worst,
                         std::fabs(defect[static_cast<size_t>(j)] -
                                   c1 * basis1[static_cast<size_t>(j)] -
                                   c2 * basis2[static_cast<size_t>(j)]));
    return worst;
}

}  // namespace fracbvp
