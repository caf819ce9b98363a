#pragma once

#include <vector>

#include "fracbvp/grid.hpp"
#include "fracbvp/nonlinearity.hpp"
#include "fracbvp/problem.hpp"

namespace fracbvp {

/// Global sign relating the kernel representation to solutions of the
/// boundary value problem as stated:
///
///   y(t) = representation_sign * (lambda/Gamma(v)) sum_s G(t,s) h(s+v-1) ...
///
/// The sign is fixed empirically by the equivalence oracle (kernel
/// representation vs. the assembled linear system): with G >= 0 and the
/// stated sign conventions of the equation, the solution operator carries a
/// minus. The acceptance suite re-derives the sign and asserts it matches.
inline constexpr int representation_sign = -1;

enum class SolveMethod { green, direct, fixed_point };

/// Pointwise residuals of a candidate solution against the problem:
/// |-D^v y(t) - lambda h(t+v-1) f(y(t+v-1))| per equation row, plus the two
/// boundary condition residuals.
struct ResidualReport {
    std::vector<double> equation_residuals;  // t = 0..b
    double bc1 = 0.0;      // |y(v-2)|
    double bc2 = 0.0;      // |Dy(v-2) - Dy(v+b-1)|
    double max_abs = 0.0;  // max of everything above
};

/// Cone membership diagnostics: the cone is the set of y with
/// min_{[v-1, v+b]} y >= cone_coefficient * ||y||_inf.
struct ConeReport {
    double norm = 0.0;          // max-norm over [v-2, v+b]
    double min_interior = 0.0;  // min over [v-1, v+b]
    double margin = 0.0;        // min_interior - cone_coefficient * norm
    bool member = false;        // margin >= -1e-10
};

struct Solution {
    GridFunction y;  // on [v-2, v+b]
    SolveMethod method;
    int sign;        // representation sign used (+1 for the direct method)
    ResidualReport residual;
    ConeReport cone;
    int iterations = 0;
    EvalCounters f_evals;
};

/// Direct oracle: assembles the (b+3)x(b+3) linear system for
/// -D^v y(t) = lambda * rhs(t) (rows t = 0..b, expanding D^v through the
/// sum-then-difference definition) plus the two boundary rows, and solves it
/// by Gaussian elimination with partial pivoting. rhs lives on [0, b].
Solution solve_linear_direct(const BvpShape& shape, double lambda,
                             const GridFunction& rhs);

/// Kernel-representation solve of the linear problem (f treated as 1):
/// y(t) = representation_sign * (lambda/Gamma(v)) sum_s G(t,s) h(s+v-1).
Solution solve_linear_green(const Problem& problem);

/// The positive kernel operator
///   (Fy)(t) = (lambda/Gamma(v)) sum_s G(t,s) h(s+v-1) f(y(s+v-1)),
/// which maps the cone into itself for nonnegative h and f.
/// Throws NonfiniteValue if an f evaluation overflows.
GridFunction apply_green_operator(const GridFunction& y, const Problem& problem,
                                  EvalCounters* counters = nullptr);

struct FixedPointParams {
    double tol = 1e-12;
    int max_iter = 1000;
    double damping = 1.0;  // initial theta in (0, 1]
};

/// Damped Picard iteration y <- (1-theta) y + theta * Phi(y) on the solution
/// representation Phi = representation_sign * F, so a fixed point solves the
/// boundary value problem as stated (residual_check vanishes on it).
///
/// Start: Phi(0); if f(0) = 0 (and f is not identically zero), the constant 1
/// on [v-1, v+b] with 0 at v-2. theta halves after two consecutive step-norm
/// increases. Convergence: ||y_{k+1} - y_k|| <= tol (1 + ||y_k||), confirmed
/// by ||Phi(y) - y|| <= 10 tol (1 + ||y||). Throws NonConvergence at
/// max_iter.
Solution solve_nonlinear_fixed_point(const Problem& problem,
                                     const FixedPointParams& params = {});

/// Recomputes the equation residuals through the fractional-calculus path
/// (not the solver's matrices), keeping the two code paths independent.
ResidualReport residual_check(const GridFunction& y, const Problem& problem);

ConeReport cone_membership(const GridFunction& y, const BvpShape& shape);

}  // namespace fracbvp
