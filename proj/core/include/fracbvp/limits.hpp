#pragma once

#include <array>

#include "fracbvp/nonlinearity.hpp"

namespace fracbvp {

enum class LimitClass { zero, finite, infinite };

/// Where to probe f(y)/y: y -> 0+, y -> p- for a finite p, or y -> infinity.
struct LimitTarget {
    enum class Kind { zero, point, infinity };
    Kind kind;
    double point = 0.0;

    static LimitTarget zero() { return {Kind::zero, 0.0}; }
    static LimitTarget point_below(double p) { return {Kind::point, p}; }
    static LimitTarget infinity() { return {Kind::infinity, 0.0}; }
};

struct LimitEstimate {
    LimitClass cls;
    double estimate;                 // last sample; meaningful for finite
    std::array<double, 7> samples;   // r_k for k = 2..8
};

/// Samples r_k = f(y_k)/y_k along y_k = 10^-k (zero), p - 10^-k (point) or
/// 10^k (infinity) for k = 2..8 and classifies the limit:
///   - zero when the last two |r_k| drop below 1e-6;
///   - infinite when |r_k| grows monotonically and either exceeds 1e6 or
///     keeps moving by more than the finite-stability allowance (slow
///     divergence, e.g. logarithmic);
///   - finite otherwise, with estimate r_8, provided the tail is stable:
///     |r_8 - r_7| <= 1e-4 (1 + |r_8|).
/// Throws UnstableLimit when none of the rules apply cleanly.
LimitEstimate estimate_limit_ratio(const NonlinearitySpec& f,
                                   const LimitTarget& at);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool nonempty = false;
};

/// Admissible lambda windows derived from the extremal kernel sums sigma >=
/// tau > 0 and the growth ratios l (at zero) and L (at infinity), with the
/// conventions 1/inf = 0 and 1/0 = inf:
///   first:  ( 1/(tau L), 1/(sigma l) )
///   second: ( 1/(tau l), 1/(sigma L) )
/// Each interval is nonempty iff lo < hi.
struct LambdaIntervals {
    double ratio_at_zero;      // l
    double ratio_at_infinity;  // L
    Interval first;
    Interval second;
};

LambdaIntervals lambda_intervals(double sigma, double tau, double l, double L);

}  // namespace fracbvp
