#include <doctest.h>

#include <cmath>
#include <future>
#include <limits>
#include <vector>

#include "fracbvp/errors.hpp"
#include "fracbvp/green.hpp"
#include "fracbvp/limits.hpp"
#include "fracbvp/solver.hpp"
#include "oracles.hpp"

using namespace fracbvp;

namespace {

GridFunction random_weight(const BvpShape& shape, oracle::Rng& rng) {
    std::vector<double> values(static_cast<size_t>(shape.horizon() + 2));
    for (double& x : values) x = rng.uniform(0.0, 2.0);
    return GridFunction(shape.weight_grid(), std::move(values));
}

GridFunction forcing_from_weight(const BvpShape& shape, const GridFunction& h) {
    std::vector<double> rhs(h.values().begin(), h.values().end() - 1);
    return GridFunction(shape.forcing_grid(), std::move(rhs));
}

}  // namespace

TEST_CASE("direct solve: zero forcing gives the zero solution") {
    const BvpShape shape(Rational(3, 2), 5);
    const Solution sol = solve_linear_direct(
        shape, 1.0, GridFunction::constant(shape.forcing_grid(), 0.0));
    for (int k = 0; k < sol.y.length(); ++k) CHECK(sol.y[k] == 0.0);
    CHECK(sol.residual.max_abs == 0.0);
}

TEST_CASE("direct solve: smallest shape has known exact solution") {
    // v = 3/2, b = 1, lambda = 1, unit forcing: y = (0, -12/5, -23/5, -7).
    const BvpShape shape(Rational(3, 2), 1);
    const Solution sol = solve_linear_direct(
        shape, 1.0, GridFunction::constant(shape.forcing_grid(), 1.0));
    CHECK(sol.y[0] == 0.0);
    CHECK(sol.y[1] == doctest::Approx(-2.4).epsilon(1e-13));
    CHECK(sol.y[2] == doctest::Approx(-4.6).epsilon(1e-13));
    CHECK(sol.y[3] == doctest::Approx(-7.0).epsilon(1e-13));
    CHECK(sol.residual.max_abs <= 1e-10);
    CHECK(sol.method == SolveMethod::direct);
}

TEST_CASE("direct solve satisfies both boundary conditions on random input") {
    oracle::Rng rng(0xbeef1u);
    for (const Rational& v : {Rational(11, 10), Rational(3, 2), Rational(19, 10)}) {
        for (int b : {1, 5, 10}) {
            const BvpShape shape(v, b);
            std::vector<double> rhs(static_cast<size_t>(b + 1));
            for (double& x : rhs) x = rng.uniform(-2.0, 2.0);
            const Solution sol = solve_linear_direct(
                shape, 0.7, GridFunction(shape.forcing_grid(), std::move(rhs)));
            CHECK(std::fabs(sol.y[0]) <= 1e-12);
            CHECK(sol.residual.bc2 <= 1e-10);
            CHECK(sol.residual.max_abs <= 1e-10);
        }
    }
}

TEST_CASE("representation solve matches the direct oracle") {
    oracle::Rng rng(0x5ca1eu);
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = random_weight(shape, rng);
    const Problem problem(shape, 1.0, h, NonlinearitySpec::constant(1.0));

    const Solution green = solve_linear_green(problem);
    const Solution direct = solve_linear_direct(shape, 1.0,
                                                forcing_from_weight(shape, h));
    CHECK(green.sign == representation_sign);
    CHECK(green.y[0] == 0.0);
    const double scale = 1.0 + direct.y.max_abs();
    for (int k = 0; k < green.y.length(); ++k)
        CHECK(std::fabs(green.y[k] - direct.y[k]) <= 1e-9 * scale);
    CHECK(green.residual.max_abs <= 1e-10 * scale);
}

TEST_CASE("representation solve: zero weight gives zeros") {
    const BvpShape shape(Rational(13, 10), 5);
    const Problem problem(shape, 2.0,
                          GridFunction::constant(shape.weight_grid(), 0.0),
                          NonlinearitySpec::constant(1.0));
    const Solution sol = solve_linear_green(problem);
    for (int k = 0; k < sol.y.length(); ++k) CHECK(sol.y[k] == 0.0);
}

TEST_CASE("representation solve scales exactly with lambda") {
    const BvpShape shape(Rational(5, 3), 7);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const Solution at_one =
        solve_linear_green(Problem(shape, 1.0, h, NonlinearitySpec::constant(1.0)));
    const Solution at_two =
        solve_linear_green(Problem(shape, 2.0, h, NonlinearitySpec::constant(1.0)));
    for (int k = 0; k < at_one.y.length(); ++k)
        CHECK(at_two.y[k] == doctest::Approx(2.0 * at_one.y[k]).epsilon(1e-12));
}

TEST_CASE("the kernel operator is positive, linear in lambda, zero-rooted") {
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const GridFunction y =
        GridFunction::constant(shape.solution_grid(), 1.0);

    const Problem zero_f(shape, 1.0, h, NonlinearitySpec::constant(0.0));
    const GridFunction fz = apply_green_operator(y, zero_f);
    for (int k = 0; k < fz.length(); ++k) CHECK(fz[k] == 0.0);

    const Problem p1(shape, 0.3, h, NonlinearitySpec::builtin(2));
    const Problem p2(shape, 0.6, h, NonlinearitySpec::builtin(2));
    const GridFunction f1 = apply_green_operator(y, p1);
    const GridFunction f2 = apply_green_operator(y, p2);
    CHECK(f1[0] == 0.0);
    for (int k = 0; k < f1.length(); ++k)
        CHECK(f2[k] == doctest::Approx(2.0 * f1[k]).epsilon(1e-12));
    for (int k = 1; k < f1.length(); ++k) CHECK(f1[k] > 0.0);
}

TEST_CASE("the kernel operator maps the cone into the cone") {
    oracle::Rng rng(0xc0ffeeu);
    const BvpShape shape(Rational(3, 2), 10);
    const GreenTable table = green_table(shape);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const Problem problem(shape, 0.05, h, NonlinearitySpec::builtin(2));

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> values(static_cast<size_t>(shape.horizon() + 3));
        values[0] = rng.uniform(-1.0, 1.0);
        for (size_t k = 1; k < values.size(); ++k)
            values[k] = rng.uniform(table.cone_coefficient, 1.0);
        const GridFunction member(shape.solution_grid(), std::move(values));
        REQUIRE(cone_membership(member, shape).member);

        const GridFunction image = apply_green_operator(member, problem);
        CHECK(cone_membership(image, shape).margin >= -1e-10);
    }
}

TEST_CASE("cone membership diagnostics") {
    const BvpShape shape(Rational(3, 2), 10);
    const GreenTable table = green_table(shape);

    const GridFunction zero = GridFunction::constant(shape.solution_grid(), 0.0);
    const ConeReport on_zero = cone_membership(zero, shape);
    CHECK(on_zero.member);
    CHECK(on_zero.margin == 0.0);
    CHECK(on_zero.norm == 0.0);

    // 0 at the left endpoint, constant c > 0 inside.
    std::vector<double> values(static_cast<size_t>(shape.horizon() + 3), 2.0);
    values[0] = 0.0;
    const GridFunction step(shape.solution_grid(), std::move(values));
    const ConeReport on_step = cone_membership(step, shape);
    CHECK(on_step.member);
    CHECK(on_step.norm == 2.0);
    CHECK(on_step.min_interior == 2.0);
    CHECK(on_step.margin ==
          doctest::Approx(2.0 * (1.0 - table.cone_coefficient)).epsilon(1e-13));

    std::vector<double> dipped(static_cast<size_t>(shape.horizon() + 3), 1.0);
    dipped[4] = -0.01;
    const ConeReport on_dipped =
        cone_membership(GridFunction(shape.solution_grid(), std::move(dipped)), shape);
    CHECK_FALSE(on_dipped.member);
    CHECK(on_dipped.min_interior == -0.01);
}

TEST_CASE("residual check evaluates the stated equation pointwise") {
    const BvpShape shape(Rational(3, 2), 5);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const Problem problem(shape, 0.7, h, NonlinearitySpec::constant(5.0));

    const GridFunction zero = GridFunction::constant(shape.solution_grid(), 0.0);
    const ResidualReport report = residual_check(zero, problem);
    REQUIRE(report.equation_residuals.size() == 6);
    for (double r : report.equation_residuals)
        CHECK(r == doctest::Approx(0.7 * 5.0).epsilon(1e-15));
    CHECK(report.bc1 == 0.0);
    CHECK(report.bc2 == 0.0);
    CHECK(report.max_abs == doctest::Approx(3.5).epsilon(1e-15));
}

TEST_CASE("fixed point: identically zero f converges in one iteration") {
    const BvpShape shape(Rational(3, 2), 5);
    const Problem problem(shape, 1.0,
                          GridFunction::constant(shape.weight_grid(), 1.0),
                          NonlinearitySpec::constant(0.0));
    const Solution sol = solve_nonlinear_fixed_point(problem);
    CHECK(sol.iterations == 1);
    for (int k = 0; k < sol.y.length(); ++k) CHECK(sol.y[k] == 0.0);
    CHECK(sol.method == SolveMethod::fixed_point);
    CHECK(sol.sign == representation_sign);
}

TEST_CASE("fixed point: lambda = 0 collapses to the zero solution") {
    const BvpShape shape(Rational(13, 10), 5);
    const Problem problem(shape, 0.0,
                          GridFunction::constant(shape.weight_grid(), 1.0),
                          NonlinearitySpec::constant(3.0));
    const Solution sol = solve_nonlinear_fixed_point(problem);
    CHECK(sol.iterations == 1);
    for (int k = 0; k < sol.y.length(); ++k) CHECK(sol.y[k] == 0.0);
}

TEST_CASE("fixed point on a linear problem agrees with the direct oracle") {
    const BvpShape shape(Rational(13, 10), 5);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const Problem problem(shape, 0.4, h, NonlinearitySpec::constant(2.5));
    const Solution fixed = solve_nonlinear_fixed_point(problem);
    CHECK(fixed.residual.max_abs <= 1e-8);

    std::vector<double> rhs(static_cast<size_t>(shape.horizon() + 1), 2.5);
    const Solution direct = solve_linear_direct(
        shape, 0.4, GridFunction(shape.forcing_grid(), std::move(rhs)));
    const double scale = 1.0 + direct.y.max_abs();
    for (int k = 0; k < fixed.y.length(); ++k)
        CHECK(std::fabs(fixed.y[k] - direct.y[k]) <= 1e-9 * scale);
}

TEST_CASE("fixed point on the second example shape meets every bar") {
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const double sigma = green_sum_max(shape, h);
    const Problem problem(shape, 0.9 / sigma, h, NonlinearitySpec::builtin(2));

    const Solution sol = solve_nonlinear_fixed_point(problem);
    CHECK(sol.iterations <= 1000);
    double eq_max = 0.0;
    for (double r : sol.residual.equation_residuals) eq_max = std::max(eq_max, r);
    CHECK(eq_max <= 1e-8);
    CHECK(sol.residual.bc1 <= 1e-9);
    CHECK(sol.residual.bc2 <= 1e-9);
    CHECK(sol.cone.margin >= -1e-10);

    // The returned iterate is a fixed point of the damped map: applying the
    // solution representation once more moves it by at most 10 tol.
    GridFunction once = apply_green_operator(sol.y, problem);
    double gap = 0.0;
    for (int k = 0; k < once.length(); ++k)
        gap = std::max(gap, std::fabs(representation_sign * once[k] - sol.y[k]));
    CHECK(gap <= 10.0 * 1e-12 * (1.0 + sol.y.max_abs()));
}

TEST_CASE("fixed point surfaces NonConvergence with the iteration cap") {
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const Problem problem(shape, 0.02, h, NonlinearitySpec::builtin(2));
    FixedPointParams params;
    params.max_iter = 1;
    CHECK_THROWS_AS(solve_nonlinear_fixed_point(problem, params), NonConvergence);
}

TEST_CASE("concurrent solves share nothing and agree") {
    // Everything is a pure function of its arguments, so a parameter sweep
    // may run on many threads at once.
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const double sigma = green_sum_max(shape, h);

    std::vector<std::future<double>> futures;
    for (int i = 0; i < 8; ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            const Problem problem(shape, 0.9 / sigma * (1.0 + 0.01 * (i % 2)), h,
                                  NonlinearitySpec::builtin(2));
            return solve_nonlinear_fixed_point(problem).residual.max_abs;
        }));
    }
    std::vector<double> results;
    for (auto& f : futures) results.push_back(f.get());
    for (size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i] <= 1e-8);
        if (i >= 2) CHECK(results[i] == results[i - 2]);  // same inputs, same bits
    }
}

TEST_CASE("problem validation") {
    const BvpShape shape(Rational(3, 2), 5);
    CHECK_THROWS_AS(Problem(shape, -1.0,
                            GridFunction::constant(shape.weight_grid(), 1.0),
                            NonlinearitySpec::constant(1.0)),
                    ValidationError);
    CHECK_THROWS_AS(Problem(shape, 1.0,
                            GridFunction::constant(shape.weight_grid(), -0.5),
                            NonlinearitySpec::constant(1.0)),
                    ValidationError);
    CHECK_THROWS_AS(Problem(shape, 1.0,
                            GridFunction::constant(shape.solution_grid(), 1.0),
                            NonlinearitySpec::constant(1.0)),
                    ValidationError);
}

TEST_CASE("limit ratio classification on the builtin examples") {
    const NonlinearitySpec e1 = NonlinearitySpec::builtin(1);
    const NonlinearitySpec e2 = NonlinearitySpec::builtin(2);
    const NonlinearitySpec e3 = NonlinearitySpec::builtin(3);

    CHECK(estimate_limit_ratio(e1, LimitTarget::zero()).cls == LimitClass::infinite);
    CHECK(estimate_limit_ratio(e1, LimitTarget::point_below(5.0)).cls ==
          LimitClass::zero);
    CHECK(estimate_limit_ratio(e1, LimitTarget::infinity()).cls ==
          LimitClass::infinite);

    const LimitEstimate e2_zero = estimate_limit_ratio(e2, LimitTarget::zero());
    CHECK(e2_zero.cls == LimitClass::finite);
    CHECK(std::fabs(e2_zero.estimate - 2.0) <= 1e-4);
    const LimitEstimate e2_inf = estimate_limit_ratio(e2, LimitTarget::infinity());
    CHECK(e2_inf.cls == LimitClass::finite);
    CHECK(std::fabs(e2_inf.estimate - 1.0) <= 1e-4);

    CHECK(estimate_limit_ratio(e3, LimitTarget::zero()).cls == LimitClass::infinite);
    CHECK(estimate_limit_ratio(e3, LimitTarget::point_below(7.0)).cls ==
          LimitClass::zero);
}

TEST_CASE("oscillating ratio samples refuse to classify") {
    // A table whose f(y)/y alternates between 5 and 1 along the sampling
    // ladder is neither settling, vanishing, nor monotone.
    const NonlinearitySpec f = NonlinearitySpec::table({{1e-8, 5e-8},
                                                        {1e-7, 1e-7},
                                                        {1e-6, 5e-6},
                                                        {1e-5, 1e-5},
                                                        {1e-4, 5e-4},
                                                        {1e-3, 1e-3},
                                                        {1e-2, 5e-2}});
    CHECK_THROWS_AS(estimate_limit_ratio(f, LimitTarget::zero()), UnstableLimit);
}

TEST_CASE("lambda windows from the extremal sums and growth ratios") {
    const LambdaIntervals plain = lambda_intervals(1.0, 1.0, 2.0, 1.0);
    CHECK(plain.first.lo == 1.0);
    CHECK(plain.first.hi == 0.5);
    CHECK_FALSE(plain.first.nonempty);
    CHECK(plain.second.lo == 0.5);
    CHECK(plain.second.hi == 1.0);
    CHECK(plain.second.nonempty);

    const double inf = std::numeric_limits<double>::infinity();
    const LambdaIntervals zero_l = lambda_intervals(2.0, 1.0, 0.0, 1.0);
    CHECK(zero_l.first.hi == inf);  // 1/(sigma * 0)
    CHECK(zero_l.first.nonempty);
    const LambdaIntervals inf_l = lambda_intervals(2.0, 1.0, inf, inf);
    CHECK(inf_l.first.lo == 0.0);
    CHECK(inf_l.first.hi == 0.0);
    CHECK_FALSE(inf_l.first.nonempty);

    CHECK_THROWS_AS(lambda_intervals(1.0, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(lambda_intervals(1.0, 2.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(lambda_intervals(1.0, 1.0, -1.0, 1.0), DomainError);
}

TEST_CASE("interval consistency on the second example's shape") {
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const double sigma = green_sum_max(shape, h);
    const double tau = green_sum_min(shape, h);
    const LambdaIntervals intervals = lambda_intervals(sigma, tau, 2.0, 1.0);
    // Nonempty second window would need sigma < 2 tau; verify the flag agrees
    // with the arithmetic restatement.
    CHECK(intervals.second.nonempty == (sigma * 1.0 < tau * 2.0));
    CHECK(intervals.first.nonempty == (sigma * 2.0 < tau * 1.0));
}
