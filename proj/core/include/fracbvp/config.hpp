#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fracbvp/nonlinearity.hpp"
#include "fracbvp/problem.hpp"
#include "fracbvp/rational.hpp"

namespace fracbvp {

/// Parsed problem description. The wire form is line-based "key = value"
/// text with '#' comments and exactly the keys v, b, lambda, h, f:
///
///   v = 13/10
///   b = 5
///   lambda = 0.05
///   h = constant 1        (or: h = values x0,x1,...,x_{b+1})
///   f = builtin example1  (or: f = constant c | f = table y0:f0,y1:f1,...)
struct ProblemConfig {
    Rational v;
    int b = 0;
    double lambda = 0.0;
    std::variant<double, std::vector<double>> h;  // constant or b+2 values
    NonlinearitySpec f = NonlinearitySpec::constant(0.0);

    friend bool operator==(const ProblemConfig& a,
                           const ProblemConfig& b) = default;
};

/// Parses and validates config text. Unknown keys, duplicates and syntax
/// problems raise ParseError with the offending line; semantic failures
/// raise ValidationError naming the field and the line it came from.
ProblemConfig parse_problem_config(std::string_view text);

/// Canonical text form; parse(print(c)) == c for every valid config.
std::string print_problem_config(const ProblemConfig& config);

/// Instantiates the validated problem (builds the shape and the weight).
Problem make_problem(const ProblemConfig& config);

/// Built-in example problems 1..3.
ProblemConfig builtin_example_config(int n);

}  // namespace fracbvp
