#include <benchmark/benchmark.h>

#include <vector>

#include "fracbvp/falling_factorial.hpp"
#include "fracbvp/frac_calc.hpp"
#include "fracbvp/gamma.hpp"
#include "fracbvp/green.hpp"
#include "fracbvp/solver.hpp"

using namespace fracbvp;

static void BM_signed_log_gamma(benchmark::State& state) {
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(signed_log_gamma(x));
        x += 0.37;
        if (x > 28.0) x = 0.3;
    }
}
BENCHMARK(BM_signed_log_gamma);

static void BM_falling_factorial(benchmark::State& state) {
    const Rational v(13, 10);
    int k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            falling_factorial(v - Rational(2) + Rational(k % 14), v - Rational(1)));
        ++k;
    }
}
BENCHMARK(BM_falling_factorial);

static void BM_fractional_difference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Rational v(3, 2);
    std::vector<double> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = 0.1 * i;
    const GridFunction f(Grid(v - Rational(2), n), values);
    for (auto _ : state) benchmark::DoNotOptimize(fractional_difference(f, v));
}
BENCHMARK(BM_fractional_difference)->Arg(8)->Arg(15);

static void BM_green_table(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    const BvpShape shape(Rational(3, 2), b);
    for (auto _ : state) benchmark::DoNotOptimize(green_table(shape));
}
BENCHMARK(BM_green_table)->Arg(5)->Arg(10)->Arg(12);

static void BM_solve_linear_direct(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    const BvpShape shape(Rational(3, 2), b);
    const GridFunction rhs = GridFunction::constant(shape.forcing_grid(), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_linear_direct(shape, 1.0, rhs));
}
BENCHMARK(BM_solve_linear_direct)->Arg(5)->Arg(10)->Arg(12);

static void BM_solve_fixed_point(benchmark::State& state) {
    const BvpShape shape(Rational(3, 2), 10);
    const GridFunction h = GridFunction::constant(shape.weight_grid(), 1.0);
    const double sigma = green_sum_max(shape, h);
    const Problem problem(shape, 0.9 / sigma, h, NonlinearitySpec::builtin(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_nonlinear_fixed_point(problem));
}
BENCHMARK(BM_solve_fixed_point);

BENCHMARK_MAIN();
