#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fracbvp {

/// Counters for the guarded evaluations a solver may want to surface.
struct EvalCounters {
    std::int64_t clamps = 0;          // arguments clamped up to the floor
    std::int64_t extrapolations = 0;  // table lookups outside the y-range
};

/// Right-hand-side nonlinearity f(y). Either a constant, one of the three
/// built-in example functions, or a piecewise-linear table.
///
/// Built-ins:
///   example1: f(y) = (y^2 - 5y) log y
///   example2: f(y) = y (1 + e^{-y})
///   example3: f(y) = (7 - y) e^{1/y}
///
/// example1 and example3 are undefined at y <= 0; their arguments are
/// clamped to 1e-12 and the clamp is counted. Tables interpolate linearly
/// inside their y-range and extrapolate as constants outside (counted).
class NonlinearitySpec {
public:
    enum class Kind { constant, builtin, table };

    static NonlinearitySpec constant(double c);
    static NonlinearitySpec builtin(int index);  // 1, 2 or 3
    static NonlinearitySpec table(std::vector<std::pair<double, double>> points);

    double eval(double y, EvalCounters* counters = nullptr) const;

    Kind kind() const { return kind_; }
    double constant_value() const { return constant_; }
    int builtin_index() const { return builtin_; }
    const std::vector<std::pair<double, double>>& table_points() const {
        return points_;
    }

    bool is_identically_zero() const {
        return kind_ == Kind::constant && constant_ == 0.0;
    }

    friend bool operator==(const NonlinearitySpec& a,
                           const NonlinearitySpec& b) = default;

private:
    NonlinearitySpec() = default;

    Kind kind_ = Kind::constant;
    double constant_ = 0.0;
    int builtin_ = 0;
    std::vector<std::pair<double, double>> points_;
};

/// Floor used when clamping arguments of the log/exp built-ins.
inline constexpr double kEvalFloor = 1e-12;

}  // namespace fracbvp
