// Command-line front end: solve boundary value problem configs, export
// Green tables and constants, verify the kernel identities, and reproduce
// the built-in example problems.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracbvp/config.hpp"
#include "fracbvp/errors.hpp"
#include "fracbvp/falling_factorial.hpp"
#include "fracbvp/frac_calc.hpp"
#include "fracbvp/green.hpp"
#include "fracbvp/io.hpp"
#include "fracbvp/limits.hpp"
#include "fracbvp/solver.hpp"

namespace {

using namespace fracbvp;

// Deterministic generator so verify output is byte-identical across runs.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ProblemConfig load_config(const std::string& path) {
    return parse_problem_config(read_file(path));
}

GridFunction parse_weight_option(const std::string& text, const BvpShape& shape) {
    if (text.find(',') == std::string::npos) {
        const double c = std::stod(text);
        return GridFunction::constant(shape.weight_grid(), c);
    }
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) values.push_back(std::stod(item));
    return GridFunction(shape.weight_grid(), std::move(values));
}

// ---------------------------------------------------------------- solve --

int cmd_solve(const std::string& config_path, const std::string& method,
              double tol, int max_iter, std::optional<double> lambda_override,
              const std::string& out_path) {
    ProblemConfig config = load_config(config_path);
    if (lambda_override) {
        if (!(*lambda_override > 0.0))
            throw ValidationError("lambda", "override must be > 0");
        config.lambda = *lambda_override;
    }
    Problem problem = make_problem(config);

    Solution solution = [&] {
        if (method == "direct") {
            std::vector<double> rhs(static_cast<size_t>(problem.shape.horizon() + 1));
            for (size_t t = 0; t < rhs.size(); ++t)
                rhs[t] = problem.h[static_cast<int>(t)];
            return solve_linear_direct(problem.shape, problem.lambda,
                                       GridFunction(problem.shape.forcing_grid(),
                                                    std::move(rhs)));
        }
        if (method == "green") return solve_linear_green(problem);
        FixedPointParams params;
        params.tol = tol;
        params.max_iter = max_iter;
        return solve_nonlinear_fixed_point(problem, params);
    }();

    atomic_write_file(out_path, solution_csv(solution));
    std::cout << solution_report(solution);
    return 0;
}

// ------------------------------------------------------- green/constants --

int cmd_green(const std::string& v_text, int b, const std::string& out_path) {
    const BvpShape shape(Rational::parse(v_text), b);
    atomic_write_file(out_path, green_csv(green_table(shape)));
    return 0;
}

int cmd_constants(const std::string& v_text, int b,
                  const std::optional<std::string>& h_text) {
    const BvpShape shape(Rational::parse(v_text), b);
    std::optional<GridFunction> h;
    if (h_text) h = parse_weight_option(*h_text, shape);
    const GreenTable table = green_table(shape, h);

    std::cout << "v = " << shape.order().str() << "\n";
    std::cout << "b = " << shape.horizon() << "\n";
    std::cout << "denominator = " << format_double(shape.denominator()) << "\n";
    std::cout << "bound_constant = " << format_double(table.bound_constant) << "\n";
    std::cout << "cone_coefficient = " << format_double(table.cone_coefficient)
              << "\n";
    if (table.sigma_h) {
        std::cout << "sigma = " << format_double(*table.sigma_h) << "\n";
        std::cout << "tau = " << format_double(*table.tau_h) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const std::string& v_text, int b) {
    const Rational v = Rational::parse(v_text);
    const BvpShape shape(v, b);
    bool all_pass = true;
    const auto report = [&](const std::string& name, bool pass,
                            const std::string& detail) {
        std::cout << name << ": " << (pass ? "PASS" : "FAIL")
                  << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        all_pass = all_pass && pass;
    };

    {  // difference rule D t^(w) = w t^(w-1), pointwise
        double worst = 0.0;
        for (const Rational& order : {v, v - Rational(1)}) {
            for (const Rational& base :
                 {v - Rational(2), v - Rational(1), Rational(0)}) {
                const Grid grid(base, b + 3);
                const GridFunction f = GridFunction::sample(
                    grid, [&](Rational t) { return falling_factorial(t, order); });
                const GridFunction diff = forward_difference(f, 1);
                for (int k = 0; k < diff.length(); ++k) {
                    const double expected =
                        order.to_double() *
                        falling_factorial(grid.point(k), order - Rational(1));
                    worst = std::max(worst, std::fabs(diff[k] - expected) /
                                                (1.0 + std::fabs(expected)));
                }
            }
        }
        report("falling-factorial difference rule", worst <= 1e-10,
               "worst relative error " + format_shortest(worst));
    }

    {  // sum-difference composition defect stays in the two-function span
        SplitMix64 rng(0x5eedu);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> values(static_cast<size_t>(b + 3));
            for (double& x : values) x = rng.uniform(-1.0, 1.0);
            const GridFunction y(shape.solution_grid(), std::move(values));
            worst = std::max(worst, composition_span_residual(y, v));
        }
        report("composition span property", worst <= 1e-9,
               "worst span residual " + format_shortest(worst));
    }

    {  // kernel bound slacks
        const GreenBoundsReport bounds = verify_green_bounds(shape);
        report("kernel bounds", bounds.pass,
               "min slack " +
                   format_shortest(std::min(bounds.min_upper_slack,
                                            bounds.min_lower_slack)) +
                   ", min diagonal " + format_shortest(bounds.min_diagonal));
    }

    {  // kernel representation against the assembled linear system
        SplitMix64 rng(0xfacadeu);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> h_values(static_cast<size_t>(b + 2));
            for (double& x : h_values) x = rng.uniform(0.0, 2.0);
            const GridFunction h(shape.weight_grid(), h_values);
            const Problem problem(shape, 1.0, h, NonlinearitySpec::constant(1.0));
            const Solution green = solve_linear_green(problem);
            std::vector<double> rhs(h_values.begin(), h_values.end() - 1);
            const Solution direct = solve_linear_direct(
                shape, 1.0, GridFunction(shape.forcing_grid(), std::move(rhs)));
            const double scale = 1.0 + direct.y.max_abs();
            for (int k = 0; k < green.y.length(); ++k)
                worst = std::max(worst,
                                 std::fabs(green.y[k] - direct.y[k]) / scale);
        }
        report("representation vs direct solve", worst <= 1e-9,
               "worst scaled difference " + format_shortest(worst));
    }

    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------- interval --

struct IntervalAnalysis {
    LimitEstimate at_zero{}, at_b{}, at_infinity{};
    double sigma = 0.0, tau = 0.0;
    std::optional<LambdaIntervals> intervals;
    bool all_lambda = false;
};

std::string limit_str(const LimitEstimate& e) {
    switch (e.cls) {
        case LimitClass::zero: return "0";
        case LimitClass::infinite: return "inf";
        case LimitClass::finite: return format_shortest(e.estimate);
    }
    return "?";
}

IntervalAnalysis analyze_intervals(const Problem& problem) {
    IntervalAnalysis a;
    a.at_zero = estimate_limit_ratio(problem.f, LimitTarget::zero());
    a.at_b = estimate_limit_ratio(
        problem.f, LimitTarget::point_below(problem.shape.horizon()));
    a.at_infinity = estimate_limit_ratio(problem.f, LimitTarget::infinity());
    a.sigma = green_sum_max(problem.shape, problem.h);
    a.tau = green_sum_min(problem.shape, problem.h);
    a.all_lambda = a.at_zero.cls == LimitClass::infinite &&
                   a.at_b.cls == LimitClass::zero;
    const double l = a.at_zero.cls == LimitClass::infinite
                         ? std::numeric_limits<double>::infinity()
                         : (a.at_zero.cls == LimitClass::zero ? 0.0
                                                              : a.at_zero.estimate);
    const double L = a.at_infinity.cls == LimitClass::infinite
                         ? std::numeric_limits<double>::infinity()
                         : (a.at_infinity.cls == LimitClass::zero
                                ? 0.0
                                : a.at_infinity.estimate);
    if (l >= 0.0 && L >= 0.0) {
        a.intervals = lambda_intervals(a.sigma, a.tau, l, L);
    } else {
        // A negative growth ratio (f dips below zero) admits no window.
        a.intervals = LambdaIntervals{l, L, {0.0, 0.0, false}, {0.0, 0.0, false}};
    }
    return a;
}

void print_interval_analysis(const IntervalAnalysis& a) {
    std::cout << "limit_at_zero = " << limit_str(a.at_zero) << "\n";
    std::cout << "limit_at_b = " << limit_str(a.at_b) << "\n";
    std::cout << "limit_at_infinity = " << limit_str(a.at_infinity) << "\n";
    std::cout << "sigma = " << format_double(a.sigma) << "\n";
    std::cout << "tau = " << format_double(a.tau) << "\n";
    const auto print_interval = [](const char* name, const Interval& i) {
        std::cout << name << ".lo = " << format_double(i.lo) << "\n";
        std::cout << name << ".hi = " << format_double(i.hi) << "\n";
        std::cout << name << ".nonempty = " << (i.nonempty ? "true" : "false")
                  << "\n";
    };
    print_interval("interval1", a.intervals->first);
    print_interval("interval2", a.intervals->second);
    std::string certified = "none";
    if (a.all_lambda) {
        certified = "all_lambda";
    } else if (a.at_zero.cls == LimitClass::finite &&
               a.at_infinity.cls == LimitClass::finite) {
        const bool one = a.intervals->first.nonempty;
        const bool two = a.intervals->second.nonempty;
        if (one && two) certified = "interval1+interval2";
        else if (one) certified = "interval1";
        else if (two) certified = "interval2";
    }
    std::cout << "certified = " << certified << "\n";
}

int cmd_interval(const std::string& config_path) {
    const Problem problem = make_problem(load_config(config_path));
    print_interval_analysis(analyze_intervals(problem));
    return 0;
}

// -------------------------------------------------------------- example --

int cmd_example(int n) {
    const ProblemConfig config = builtin_example_config(n);
    const std::string stem = "example" + std::to_string(n);
    atomic_write_file(stem + ".config", print_problem_config(config));
    std::cout << "config_file = " << stem << ".config\n";

    const Problem problem = make_problem(config);
    const IntervalAnalysis analysis = analyze_intervals(problem);
    print_interval_analysis(analysis);

    if (n != 2) return 0;

    // Pick lambda from a nonempty window when one exists, otherwise fall
    // back to 0.9/sigma, and run the fixed-point solve.
    double lambda = 0.0;
    std::string source;
    if (analysis.intervals->second.nonempty) {
        lambda = 0.5 * (analysis.intervals->second.lo + analysis.intervals->second.hi);
        source = "interval2_midpoint";
    } else if (analysis.intervals->first.nonempty) {
        lambda = 0.5 * (analysis.intervals->first.lo + analysis.intervals->first.hi);
        source = "interval1_midpoint";
    } else {
        lambda = 0.9 / analysis.sigma;
        source = "0.9_over_sigma";
    }
    std::cout << "lambda = " << format_double(lambda) << "\n";
    std::cout << "lambda_source = " << source << "\n";

    const Problem solved(problem.shape, lambda, problem.h, problem.f);
    const Solution solution = solve_nonlinear_fixed_point(solved);
    atomic_write_file(stem + "_solution.csv", solution_csv(solution));
    atomic_write_file(stem + "_report.txt", solution_report(solution));
    std::cout << solution_report(solution);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete fractional boundary value problem toolkit"};
    app.require_subcommand(1);

    std::string config_path, method = "fixedpoint", out_path, v_text;
    std::optional<double> lambda_override;
    std::optional<std::string> h_text;
    double tol = 1e-12;
    int max_iter = 1000, b = 1, example_n = 1;

    auto* solve = app.add_subcommand("solve", "Solve a problem config");
    solve->add_option("--config", config_path, "Problem config file")->required();
    solve->add_option("--method", method, "green|direct|fixedpoint")
        ->check(CLI::IsMember({"green", "direct", "fixedpoint"}))
        ->required();
    solve->add_option("--tol", tol, "Fixed-point convergence tolerance");
    solve->add_option("--max-iter", max_iter, "Fixed-point iteration cap");
    solve->add_option("--lambda", lambda_override, "Override the config lambda");
    solve->add_option("--out", out_path, "Solution CSV path")->required();

    auto* green = app.add_subcommand("green", "Export the Green table as CSV");
    green->add_option("--v", v_text, "Order, a rational in (1,2)")->required();
    green->add_option("--b", b, "Horizon")->required();
    green->add_option("--out", out_path, "Green CSV path")->required();

    auto* constants = app.add_subcommand("constants", "Print shape constants");
    constants->set_help_flag("--help", "Print help");  // frees -h for the weight
    constants->add_option("--v", v_text, "Order, a rational in (1,2)")->required();
    constants->add_option("--b", b, "Horizon")->required();
    constants->add_option("--h", h_text,
                          "Weight: a single value or b+2 comma-separated values");

    auto* verify = app.add_subcommand("verify", "Run the identity suites");
    verify->add_option("--v", v_text, "Order, a rational in (1,2)")->required();
    verify->add_option("--b", b, "Horizon")->required();

    auto* interval = app.add_subcommand("interval", "Growth limits and lambda windows");
    interval->add_option("--config", config_path, "Problem config file")->required();

    auto* example = app.add_subcommand("example", "Emit and analyze a built-in example");
    example->add_option("n", example_n, "Example number (1, 2 or 3)")
        ->check(CLI::Range(1, 3))
        ->required();

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return cmd_solve(config_path, method, tol, max_iter, lambda_override,
                             out_path);
        if (green->parsed()) return cmd_green(v_text, b, out_path);
        if (constants->parsed()) return cmd_constants(v_text, b, h_text);
        if (verify->parsed()) return cmd_verify(v_text, b);
        if (interval->parsed()) return cmd_interval(config_path);
        if (example->parsed()) return cmd_example(example_n);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnstableLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
