#include "fracbvp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracbvp/errors.hpp"
#include "fracbvp/falling_factorial.hpp"
#include "fracbvp/frac_calc.hpp"
#include "fracbvp/gamma.hpp"

namespace fracbvp {

namespace {

ResidualReport residual_against_forcing(const GridFunction& y,
                                        const BvpShape& shape,
                                        const std::vector<double>& forcing) {
    const int b = shape.horizon();
    const GridFunction diff = fractional_difference(y, shape.order());
    // diff lives on [0, b] by the domain bookkeeping of the composition.

    ResidualReport report;
    report.equation_residuals.resize(static_cast<size_t>(b + 1));
    double max_abs = 0.0;
    for (int t = 0; t <= b; ++t) {
        const double r = std::fabs(-diff[t] - forcing[static_cast<size_t>(t)]);
        report.equation_residuals[static_cast<size_t>(t)] = r;
        max_abs = std::max(max_abs, r);
    }
    report.bc1 = std::fabs(y[0]);
    report.bc2 = std::fabs((y[1] - y[0]) - (y[b + 2] - y[b + 1]));
    report.max_abs = std::max({max_abs, report.bc1, report.bc2});
    return report;
}

}  // namespace

ResidualReport residual_check(const GridFunction& y, const Problem& problem) {
    if (y.grid() != problem.shape.solution_grid())
        throw DomainError("candidate solution must live on [v-2, v+b]");
    const int b = problem.shape.horizon();
    std::vector<double> forcing(static_cast<size_t>(b + 1));
    for (int t = 0; t <= b; ++t)
        forcing[static_cast<size_t>(t)] =
            problem.lambda * problem.h[t] * problem.f.eval(y[t + 1]);
    return residual_against_forcing(y, problem.shape, forcing);
}

ConeReport cone_membership(const GridFunction& y, const BvpShape& shape) {
    if (y.grid() != shape.solution_grid())
        throw DomainError("cone membership needs a function on [v-2, v+b]");

    ConeReport report;
    report.norm = y.max_abs();
    double lo = std::numeric_limits<double>::infinity();
    for (int k = 1; k < y.length(); ++k) lo = std::min(lo, y[k]);
    report.min_interior = lo;
    report.margin = report.min_interior - cone_coefficient(shape) * report.norm;
    report.member = report.margin >= -1e-10;
    return report;
}

Solution solve_linear_direct(const BvpShape& shape, double lambda,
                             const GridFunction& rhs) {
    if (rhs.grid() != shape.forcing_grid())
        throw DomainError("rhs must live on [0, b] with b+1 values");
    const Rational& v = shape.order();
    const int b = shape.horizon();
    const int n = b + 3;

    // Inner-sum kernel of order mu = 2 - v, normalized by Gamma(mu) so the
    // leading weight is exactly 1.
    const Rational mu = Rational(2) - v;
    const double gamma_mu = gamma_value(mu.to_double());
    std::vector<double> u(static_cast<size_t>(n), 0.0);
    for (int m = 0; m < n; ++m)
        u[static_cast<size_t>(m)] =
            falling_factorial(mu - Rational(1) + Rational(m), mu - Rational(1)) /
            gamma_mu;
    const auto weight = [&](int m) {
        return (m >= 0 && m < n) ? u[static_cast<size_t>(m)] : 0.0;
    };

    // Rows 0..b: -(second difference of the inner sum) = lambda * rhs.
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> rhs_vec(static_cast<size_t>(n), 0.0);
    for (int i = 0; i <= b; ++i) {
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] =
                -(weight(i + 2 - j) - 2.0 * weight(i + 1 - j) + weight(i - j));
        rhs_vec[static_cast<size_t>(i)] = lambda * rhs[i];
    }
    // y(v-2) = 0.
    a[static_cast<size_t>(b + 1) * n + 0] = 1.0;
    // Dy(v-2) - Dy(v+b-1) = 0.
    a[static_cast<size_t>(b + 2) * n + 0] = -1.0;
    a[static_cast<size_t>(b + 2) * n + 1] = 1.0;
    a[static_cast<size_t>(b + 2) * n + b + 1] = 1.0;
    a[static_cast<size_t>(b + 2) * n + b + 2] = -1.0;

    // Gaussian elimination with partial pivoting.
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    auto at = [&](int r, int c) -> double& {
        return a[static_cast<size_t>(perm[static_cast<size_t>(r)]) * n + c];
    };
    auto rv = [&](int r) -> double& {
        return rhs_vec[static_cast<size_t>(perm[static_cast<size_t>(r)])];
    };
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(at(r, col)) > std::fabs(at(pivot_row, col))) pivot_row = r;
        if (std::fabs(at(pivot_row, col)) < 1e-12)
            throw SingularSystem("pivot below 1e-12 in the direct solve");
        std::swap(perm[static_cast<size_t>(col)], perm[static_cast<size_t>(pivot_row)]);
        for (int r = col + 1; r < n; ++r) {
            const double factor = at(r, col) / at(col, col);
            if (factor == 0.0) continue;
            at(r, col) = 0.0;
            for (int c = col + 1; c < n; ++c) at(r, c) -= factor * at(col, c);
            rv(r) -= factor * rv(col);
        }
    }
    std::vector<double> y(static_cast<size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = rv(r);
        for (int c = r + 1; c < n; ++c) acc -= at(r, c) * y[static_cast<size_t>(c)];
        y[static_cast<size_t>(r)] = acc / at(r, r);
    }

    GridFunction solution(shape.solution_grid(), std::move(y));
    std::vector<double> forcing(static_cast<size_t>(b + 1));
    for (int t = 0; t <= b; ++t)
        forcing[static_cast<size_t>(t)] = lambda * rhs[t];

    return Solution{solution,
                    SolveMethod::direct,
                    +1,
                    residual_against_forcing(solution, shape, forcing),
                    cone_membership(solution, shape),
                    0,
                    {}};
}

namespace {

// sign * (lambda/Gamma(v)) sum_s G(t,s) * forcing(s) over the full solution
// grid, using an already-built table.
GridFunction representation_apply(const GreenTable& table, double lambda,
                                  const std::vector<double>& forcing, int sign) {
    const BvpShape& shape = table.shape;
    const int b = shape.horizon();
    std::vector<double> values(static_cast<size_t>(b + 3), 0.0);
    for (int k = 0; k <= b + 2; ++k) {
        double acc = 0.0;
        for (int s = 0; s <= b; ++s)
            acc += table.value(k, s) * forcing[static_cast<size_t>(s)];
        values[static_cast<size_t>(k)] =
            sign * lambda / shape.gamma_of_order() * acc;
    }
    return GridFunction(shape.solution_grid(), std::move(values));
}

// Forcing h(s+v-1) f(y(s+v-1)) for s = 0..b, guarding non-finite f values.
std::vector<double> nonlinear_forcing(const GridFunction& y,
                                      const Problem& problem,
                                      EvalCounters* counters) {
    const int b = problem.shape.horizon();
    std::vector<double> forcing(static_cast<size_t>(b + 1));
    for (int s = 0; s <= b; ++s) {
        const double fy = problem.f.eval(y[s + 1], counters);
        if (!std::isfinite(fy))
            throw NonfiniteValue("f evaluation overflowed at y = " +
                                 std::to_string(y[s + 1]));
        forcing[static_cast<size_t>(s)] = problem.h[s] * fy;
    }
    return forcing;
}

}  // namespace

Solution solve_linear_green(const Problem& problem) {
    const int b = problem.shape.horizon();
    std::vector<double> forcing(static_cast<size_t>(b + 1));
    for (int s = 0; s <= b; ++s) forcing[static_cast<size_t>(s)] = problem.h[s];

    GridFunction y = representation_apply(green_table(problem.shape),
                                          problem.lambda, forcing,
                                          representation_sign);
    Problem linear(problem.shape, problem.lambda, problem.h,
                   NonlinearitySpec::constant(1.0));
    return Solution{y,
                    SolveMethod::green,
                    representation_sign,
                    residual_check(y, linear),
                    cone_membership(y, problem.shape),
                    0,
                    {}};
}

GridFunction apply_green_operator(const GridFunction& y, const Problem& problem,
                                  EvalCounters* counters) {
    if (y.grid() != problem.shape.solution_grid())
        throw DomainError("operator input must live on [v-2, v+b]");
    return representation_apply(green_table(problem.shape), problem.lambda,
                                nonlinear_forcing(y, problem, counters), +1);
}

Solution solve_nonlinear_fixed_point(const Problem& problem,
                                     const FixedPointParams& params) {
    if (params.tol <= 0.0) throw DomainError("tol must be positive");
    if (params.max_iter < 1) throw DomainError("max_iter must be >= 1");
    if (!(params.damping > 0.0) || params.damping > 1.0)
        throw DomainError("damping must lie in (0, 1]");

    const BvpShape& shape = problem.shape;
    const int b = shape.horizon();
    EvalCounters counters;
    const GreenTable table = green_table(shape);  // built once, reused per step

    const auto iterate_once = [&](const GridFunction& y) {
        return representation_apply(table, problem.lambda,
                                    nonlinear_forcing(y, problem, &counters),
                                    representation_sign);
    };

    // Starting iterate: the image of the zero function; if f vanishes at 0
    // (but is not identically zero) that image is zero too, so start from the
    // constant 1 with the pinned boundary point at 0 instead.
    GridFunction y = [&] {
        if (problem.f.eval(0.0) == 0.0 && !problem.f.is_identically_zero()) {
            std::vector<double> start(static_cast<size_t>(b + 3), 1.0);
            start[0] = 0.0;
            return GridFunction(shape.solution_grid(), std::move(start));
        }
        return iterate_once(GridFunction::constant(shape.solution_grid(), 0.0));
    }();

    double theta = params.damping;
    double prev_delta = std::numeric_limits<double>::infinity();
    int consecutive_increases = 0;
    double delta = prev_delta;

    for (int iteration = 1; iteration <= params.max_iter; ++iteration) {
        const GridFunction phi = iterate_once(y);
        std::vector<double> next(static_cast<size_t>(b + 3));
        delta = 0.0;
        for (int k = 0; k <= b + 2; ++k) {
            next[static_cast<size_t>(k)] = (1.0 - theta) * y[k] + theta * phi[k];
            delta = std::max(delta, std::fabs(next[static_cast<size_t>(k)] - y[k]));
        }
        const double norm_prev = y.max_abs();
        GridFunction y_next(shape.solution_grid(), std::move(next));

        if (delta > prev_delta) {
            if (++consecutive_increases >= 2) {
                theta *= 0.5;
                consecutive_increases = 0;
            }
        } else {
            consecutive_increases = 0;
        }
        prev_delta = delta;
        y = y_next;

        if (delta <= params.tol * (1.0 + norm_prev)) {
            // Confirm the candidate really is a fixed point of the damped map
            // before declaring victory; a collapsed theta can otherwise make
            // steps small without convergence.
            const GridFunction check = iterate_once(y);
            double fixed_point_gap = 0.0;
            for (int k = 0; k <= b + 2; ++k)
                fixed_point_gap = std::max(fixed_point_gap, std::fabs(check[k] - y[k]));
            if (fixed_point_gap <= 10.0 * params.tol * (1.0 + y.max_abs())) {
                return Solution{y,
                                SolveMethod::fixed_point,
                                representation_sign,
                                residual_check(y, problem),
                                cone_membership(y, shape),
                                iteration,
                                counters};
            }
        }
    }
    throw NonConvergence(params.max_iter, delta);
}

}  // namespace fracbvp
