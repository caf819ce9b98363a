#include "fracbvp/green.hpp"

#include <cmath>
#include <limits>

#include "fracbvp/errors.hpp"
#include "fracbvp/falling_factorial.hpp"
#include "fracbvp/gamma.hpp"

namespace fracbvp {

namespace {
constexpr double kDegeneracyThreshold = 1e-9;
}

BvpShape::BvpShape(Rational order, int horizon) : v_(order), b_(horizon) {
    if (b_ < 1) throw DomainError("horizon b must be >= 1");
    if (v_ == Rational(2))
        throw DegenerateProblem(
            "order v = 2 makes the representation denominator vanish");
    if (v_ <= Rational(1) || v_ > Rational(2))
        throw DomainError("order v must lie in (1, 2), got " + v_.str());

    den_ = gamma_value((v_ - Rational(1)).to_double()) -
           falling_factorial(v_ + Rational(b_ - 1), v_ - Rational(2));
    if (std::fabs(den_) <= kDegeneracyThreshold)
        throw DegenerateProblem("near-resonant shape: |Gamma(v-1) - (v+b-1)^(v-2)| = " +
                                std::to_string(std::fabs(den_)));
    gamma_v_ = gamma_value(v_.to_double());
}

Grid BvpShape::solution_grid() const { return Grid(v_ - Rational(2), b_ + 3); }
Grid BvpShape::weight_grid() const { return Grid(v_ - Rational(1), b_ + 2); }
Grid BvpShape::forcing_grid() const { return Grid(Rational(0), b_ + 1); }

double green_value(const BvpShape& shape, const Rational& t, int s) {
    const Rational& v = shape.order();
    const int b = shape.horizon();
    const auto k = shape.solution_grid().index_of(t);
    if (!k) throw DomainError("t = " + t.str() + " is not on the solution grid");
    if (s < 0 || s > b) throw DomainError("s out of range [0, b]");

    const double common =
        falling_factorial(t, v - Rational(1)) *
        falling_factorial(v + Rational(b - s - 2), v - Rational(2)) /
        shape.denominator();
    if (Rational(s) <= t - v)  // s <= k-2; seam included here
        return common + falling_factorial(t - Rational(s + 1), v - Rational(1));
    return common;
}

double bound_constant(const Rational& v, int b) {
    if (b < 1) throw DomainError("horizon b must be >= 1");
    if (v <= Rational(1) || v > Rational(2))
        throw DomainError("bound constant needs v in (1, 2], got " + v.str());

    const double den = gamma_value((v - Rational(1)).to_double()) -
                       falling_factorial(v + Rational(b - 1), v - Rational(2));

    double scan_max = -std::numeric_limits<double>::infinity();
    for (int s = 0; s <= b; ++s) {
        const double term =
            1.0 + den / falling_factorial(v + Rational(b - s - 2), v - Rational(2));
        scan_max = std::max(scan_max, term);
    }
    const double closed_form =
        1.0 + den / falling_factorial(v + Rational(b - 2), v - Rational(2));
    if (std::fabs(scan_max - closed_form) > 1e-12 * std::max(1.0, std::fabs(closed_form)))
        throw DomainError("bound constant scan disagrees with its closed form");
    return scan_max;
}

double cone_coefficient(const BvpShape& shape) {
    const Rational& v = shape.order();
    const int b = shape.horizon();
    return shape.gamma_of_order() /
           (bound_constant(v, b) *
            falling_factorial(v + Rational(b), v - Rational(1)));
}

GreenTable green_table(const BvpShape& shape,
                       const std::optional<GridFunction>& h) {
    const Rational& v = shape.order();
    const int b = shape.horizon();

    GreenTable table{shape, {}, 0.0, 0.0, std::nullopt, std::nullopt};
    table.values.resize(static_cast<size_t>(b + 3) * (b + 1));
    for (int k = 0; k <= b + 2; ++k) {
        const Rational t = shape.solution_grid().point(k);
        for (int s = 0; s <= b; ++s)
            table.values[static_cast<size_t>(k) * (b + 1) + s] =
                green_value(shape, t, s);
    }

    table.bound_constant = bound_constant(v, b);
    table.cone_coefficient = cone_coefficient(shape);

    if (h) {
        if (h->grid() != shape.weight_grid())
            throw DomainError("weight h must live on the grid [v-1, v+b]");
        for (double value : h->values())
            if (value < 0.0) throw DomainError("weight h must be nonnegative");
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int k = 1; k <= b + 2; ++k) {
            double acc = 0.0;
            for (int s = 0; s <= b; ++s) acc += table.value(k, s) * (*h)[s];
            const double weighted = acc / shape.gamma_of_order();
            lo = std::min(lo, weighted);
            hi = std::max(hi, weighted);
        }
        table.sigma_h = hi;
        table.tau_h = lo;
    }
    return table;
}

double GreenTable::value(int k, int s) const {
    return values[static_cast<size_t>(k) * cols() + s];
}

double green_sum_max(const BvpShape& shape, const GridFunction& h) {
    return *green_table(shape, h).sigma_h;
}

double green_sum_min(const BvpShape& shape, const GridFunction& h) {
    return *green_table(shape, h).tau_h;
}

GreenBoundsReport verify_green_bounds(const BvpShape& shape) {
    const Rational& v = shape.order();
    const int b = shape.horizon();
    const GreenTable table = green_table(shape);
    const double amplification =
        table.bound_constant * falling_factorial(v + Rational(b), v - Rational(1));

    GreenBoundsReport report;
    report.upper_slacks.resize(table.values.size());
    report.lower_slacks.resize(static_cast<size_t>(b + 1));
    report.diagonal.resize(static_cast<size_t>(b + 1));

    double min_entry = std::numeric_limits<double>::infinity();
    double min_upper = min_entry, min_lower = min_entry, min_diag = min_entry;

    for (int s = 0; s <= b; ++s) {
        const double diag = table.value(s + 1, s);  // t = s+v-1 is row k = s+1
        const double scale =
            falling_factorial(Rational(s) + v - Rational(1), v - Rational(1));
        report.diagonal[static_cast<size_t>(s)] = diag;
        min_diag = std::min(min_diag, diag);

        const double upper = amplification / scale * diag;
        double row_min = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= b + 2; ++k) {
            const double g = table.value(k, s);
            min_entry = std::min(min_entry, g);
            const double slack = upper - g;
            report.upper_slacks[static_cast<size_t>(k) * (b + 1) + s] = slack;
            min_upper = std::min(min_upper, slack);
            if (k >= 1) row_min = std::min(row_min, g);
        }
        const double lower = shape.gamma_of_order() / scale * diag;
        const double lower_slack = row_min - lower;
        report.lower_slacks[static_cast<size_t>(s)] = lower_slack;
        min_lower = std::min(min_lower, lower_slack);
    }

    report.min_entry = min_entry;
    report.min_upper_slack = min_upper;
    report.min_lower_slack = min_lower;
    report.min_diagonal = min_diag;
    report.pass = min_entry >= -1e-12 && min_upper >= -1e-10 &&
                  min_lower >= -1e-10 && min_diag > 0.0;
    return report;
}

}  // namespace fracbvp
