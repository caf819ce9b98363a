#include <doctest.h>

#include <cmath>

#include "fracbvp/errors.hpp"
#include "fracbvp/nonlinearity.hpp"

using namespace fracbvp;

TEST_CASE("constant nonlinearities") {
    const NonlinearitySpec f = NonlinearitySpec::constant(3.5);
    CHECK(f.eval(0.0) == 3.5);
    CHECK(f.eval(-17.0) == 3.5);
    CHECK_FALSE(f.is_identically_zero());
    CHECK(NonlinearitySpec::constant(0.0).is_identically_zero());
    CHECK_THROWS_AS(NonlinearitySpec::constant(INFINITY), ValidationError);
}

TEST_CASE("builtin example1 is (y^2 - 5y) log y with a clamped argument") {
    const NonlinearitySpec f = NonlinearitySpec::builtin(1);
    CHECK(f.eval(2.0) == doctest::Approx(-6.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(f.eval(1.0) == 0.0);
    CHECK(f.eval(5.0) == 0.0);

    EvalCounters counters;
    const double at_zero = f.eval(0.0, &counters);
    CHECK(counters.clamps == 1);
    CHECK(at_zero == f.eval(kEvalFloor));
    f.eval(-2.0, &counters);
    CHECK(counters.clamps == 2);
    f.eval(1.0, &counters);
    CHECK(counters.clamps == 2);
}

TEST_CASE("builtin example2 is y (1 + exp(-y)) with no clamping") {
    const NonlinearitySpec f = NonlinearitySpec::builtin(2);
    CHECK(f.eval(0.0) == 0.0);
    CHECK(f.eval(1.0) == doctest::Approx(1.0 + std::exp(-1.0)).epsilon(1e-15));
    EvalCounters counters;
    f.eval(-1.0, &counters);
    CHECK(counters.clamps == 0);
    CHECK(f.eval(-1.0) == doctest::Approx(-1.0 - std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("builtin example3 is (7 - y) exp(1/y)") {
    const NonlinearitySpec f = NonlinearitySpec::builtin(3);
    CHECK(f.eval(1.0) == doctest::Approx(6.0 * std::exp(1.0)).epsilon(1e-15));
    CHECK(f.eval(7.0) == 0.0);
    EvalCounters counters;
    f.eval(-5.0, &counters);
    CHECK(counters.clamps == 1);
}

TEST_CASE("builtin index validation") {
    CHECK_THROWS_AS(NonlinearitySpec::builtin(0), ValidationError);
    CHECK_THROWS_AS(NonlinearitySpec::builtin(4), ValidationError);
}

TEST_CASE("tables interpolate inside and clamp outside") {
    const NonlinearitySpec f =
        NonlinearitySpec::table({{0.0, 1.0}, {2.0, 5.0}, {4.0, 3.0}});
    CHECK(f.eval(0.0) == 1.0);
    CHECK(f.eval(1.0) == 3.0);   // halfway up the first segment
    CHECK(f.eval(3.0) == 4.0);   // halfway down the second
    CHECK(f.eval(4.0) == 3.0);

    EvalCounters counters;
    CHECK(f.eval(-1.0, &counters) == 1.0);
    CHECK(f.eval(9.0, &counters) == 3.0);
    CHECK(counters.extrapolations == 2);
    f.eval(2.0, &counters);
    CHECK(counters.extrapolations == 2);
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(NonlinearitySpec::table({}), ValidationError);
    CHECK_THROWS_AS(NonlinearitySpec::table({{1.0, 0.0}, {1.0, 2.0}}),
                    ValidationError);
    CHECK_THROWS_AS(NonlinearitySpec::table({{2.0, 0.0}, {1.0, 2.0}}),
                    ValidationError);
    CHECK_THROWS_AS(NonlinearitySpec::table({{0.0, NAN}}), ValidationError);
}

TEST_CASE("specs compare by content") {
    CHECK(NonlinearitySpec::builtin(2) == NonlinearitySpec::builtin(2));
    CHECK_FALSE(NonlinearitySpec::builtin(1) == NonlinearitySpec::builtin(2));
    CHECK(NonlinearitySpec::table({{0.0, 1.0}}) ==
          NonlinearitySpec::table({{0.0, 1.0}}));
}
