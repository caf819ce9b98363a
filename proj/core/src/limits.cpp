#include "fracbvp/limits.hpp"

#include <cmath>

#include "fracbvp/errors.hpp"

namespace fracbvp {

LimitEstimate estimate_limit_ratio(const NonlinearitySpec& f,
                                   const LimitTarget& at) {
    std::array<double, 7> r{};
    for (int k = 2; k <= 8; ++k) {
        double y = 0.0;
        switch (at.kind) {
            case LimitTarget::Kind::zero: y = std::pow(10.0, -k); break;
            case LimitTarget::Kind::point: y = at.point - std::pow(10.0, -k); break;
            case LimitTarget::Kind::infinity: y = std::pow(10.0, k); break;
        }
        const double fy = f.eval(y);
        r[static_cast<size_t>(k - 2)] = fy / y;  // may overflow to +-inf
        if (std::isnan(r[static_cast<size_t>(k - 2)]))
            throw UnstableLimit("ratio sample is NaN at k = " + std::to_string(k));
    }

    const double r7 = r[5], r8 = r[6];
    const bool stable = std::isfinite(r7) && std::isfinite(r8) &&
                        std::fabs(r8 - r7) <= 1e-4 * (1.0 + std::fabs(r8));

    if (std::fabs(r7) < 1e-6 && std::fabs(r8) < 1e-6)
        return {LimitClass::zero, r8, r};

    bool nondecreasing = true;
    for (size_t i = 1; i < r.size(); ++i)
        if (std::fabs(r[i]) < std::fabs(r[i - 1])) nondecreasing = false;
    const bool growing = nondecreasing && std::fabs(r8) > std::fabs(r[0]);

    if (growing && (std::fabs(r8) > 1e6 || !stable))
        return {LimitClass::infinite, r8, r};

    if (!stable)
        throw UnstableLimit("ratio samples neither settle nor diverge monotonically");
    return {LimitClass::finite, r8, r};
}

LambdaIntervals lambda_intervals(double sigma, double tau, double l, double L) {
    if (!(tau > 0.0)) throw DomainError("tau must be positive");
    if (!(sigma >= tau)) throw DomainError("sigma must be >= tau");
    if (l < 0.0 || L < 0.0 || std::isnan(l) || std::isnan(L))
        throw DomainError("growth ratios must be nonnegative (or infinite)");

    const auto interval = [](double lo, double hi) {
        return Interval{lo, hi, lo < hi};
    };
    // IEEE semantics give the stated conventions: x/inf = 0 and x/0 = inf.
    return LambdaIntervals{l, L, interval(1.0 / (tau * L), 1.0 / (sigma * l)),
                           interval(1.0 / (tau * l), 1.0 / (sigma * L))};
}

}  // namespace fracbvp
