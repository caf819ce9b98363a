#pragma once

#include <optional>
#include <vector>

#include "fracbvp/grid.hpp"
#include "fracbvp/rational.hpp"

namespace fracbvp {

/// Shape of the two-point boundary value problem
///
///   -D^v y(t) = forcing(t),   t in {0, ..., b},
///   y(v-2) = 0,  Dy(v-2) = Dy(v+b-1),
///
/// with strictly fractional order 1 < v < 2 and integer horizon b >= 1.
/// At v = 2 the Green's-function denominator Gamma(v-1) - (v+b-1)^(v-2)
/// vanishes, so v = 2 is rejected as degenerate.
class BvpShape {
public:
    BvpShape(Rational order, int horizon);

    const Rational& order() const { return v_; }
    int horizon() const { return b_; }

    /// Gamma(v-1) - (v+b-1)^(v-2); nonzero by construction.
    double denominator() const { return den_; }

    double gamma_of_order() const { return gamma_v_; }

    /// Grid [v-2, v+b]: where solutions live (b+3 points).
    Grid solution_grid() const;
    /// Grid [v-1, v+b]: where the weight h lives (b+2 points).
    Grid weight_grid() const;
    /// Grid [0, b]: where the equation rows live (b+1 points).
    Grid forcing_grid() const;

private:
    Rational v_;
    int b_;
    double den_;
    double gamma_v_;
};

/// Green's function G(t, s) of the shape's boundary value problem:
///
///   G(t,s) = t^(v-1) (v+b-s-2)^(v-2) / den + (t-s-1)^(v-1)   for s <= t-v,
///   G(t,s) = t^(v-1) (v+b-s-2)^(v-2) / den                   for s >  t-v,
///
/// with t on the solution grid and integer 0 <= s <= b. The seam s = t-v
/// belongs to the first branch, matching the split of the representation
/// sum into s <= t-v and s > t-v.
double green_value(const BvpShape& shape, const Rational& t, int s);

/// max_{s in [0,b]} { 1 + den / (v+b-s-2)^(v-2) }. The scan maximum is
/// attained at s = 0, which gives the closed form; both are computed and
/// cross-checked. Defined for 1 < v <= 2 (the v = 2 limit is exactly 1).
double bound_constant(const Rational& v, int b);

/// Gamma(v) / (D (v+b)^(v-1)): the fraction of its max-norm that a cone
/// member's interior minimum must reach. Lies in (0, 1].
double cone_coefficient(const BvpShape& shape);

/// Full Green table plus the derived constants. With a weight h the extremal
/// weighted kernel sums sigma_h (max) and tau_h (min) over t in [v-1, v+b]
/// are filled in as well.
struct GreenTable {
    BvpShape shape;
    std::vector<double> values;  // (b+3) x (b+1), row-major in (k, s)

    double bound_constant = 0.0;     // scan max, equals the closed form
    double cone_coefficient = 0.0;   // Gamma(v) / (D (v+b)^(v-1)), in (0,1]
    std::optional<double> sigma_h;   // max weighted sum, needs h
    std::optional<double> tau_h;     // min weighted sum, needs h

    double value(int k, int s) const;
    int rows() const { return shape.horizon() + 3; }
    int cols() const { return shape.horizon() + 1; }
};

GreenTable green_table(const BvpShape& shape,
                       const std::optional<GridFunction>& h = std::nullopt);

/// Extremal weighted kernel sums over t in [v-1, v+b] for a nonnegative
/// weight h on the weight grid:  (1/Gamma(v)) sum_s G(t,s) h(s+v-1).
double green_sum_max(const BvpShape& shape, const GridFunction& h);  // sigma
double green_sum_min(const BvpShape& shape, const GridFunction& h);  // tau

/// Slack report for the kernel envelope bounds
///
///   0 <= G(t,s) <= D (v+b)^(v-1) / (s+v-1)^(v-1) * G(s+v-1, s)
///   min_{t in [v-1,v+b]} G(t,s) >= Gamma(v) / (s+v-1)^(v-1) * G(s+v-1, s) > 0
///
/// A slack is (bound - value) oriented so that nonnegative means satisfied;
/// the report passes iff every slack is >= -1e-10 and every diagonal value
/// G(s+v-1, s) is strictly positive.
struct GreenBoundsReport {
    bool pass = false;
    double min_entry = 0.0;        // min G(t,s) over the whole table
    double min_upper_slack = 0.0;  // min over (t,s) of upper bound - G(t,s)
    double min_lower_slack = 0.0;  // min over s of row-min - lower bound
    double min_diagonal = 0.0;     // min over s of G(s+v-1, s)
    std::vector<double> upper_slacks;  // (b+3) x (b+1), row-major
    std::vector<double> lower_slacks;  // per s
    std::vector<double> diagonal;      // per s
};

GreenBoundsReport verify_green_bounds(const BvpShape& shape);

}  // namespace fracbvp
