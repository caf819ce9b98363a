#include "fracbvp/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

#include "fracbvp/errors.hpp"

namespace fracbvp {

NonlinearitySpec NonlinearitySpec::constant(double c) {
    if (!std::isfinite(c)) throw ValidationError("f", "constant must be finite");
    NonlinearitySpec spec;
    spec.kind_ = Kind::constant;
    spec.constant_ = c;
    return spec;
}

NonlinearitySpec NonlinearitySpec::builtin(int index) {
    if (index < 1 || index > 3)
        throw ValidationError("f", "no builtin example" + std::to_string(index));
    NonlinearitySpec spec;
    spec.kind_ = Kind::builtin;
    spec.builtin_ = index;
    return spec;
}

NonlinearitySpec NonlinearitySpec::table(
    std::vector<std::pair<double, double>> points) {
    if (points.empty()) throw ValidationError("f", "table needs at least one pair");
    for (const auto& [y, fy] : points)
        if (!std::isfinite(y) || !std::isfinite(fy))
            throw ValidationError("f", "table entries must be finite");
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i].first <= points[i - 1].first)
            throw ValidationError("f", "table y-values must be strictly increasing");
    NonlinearitySpec spec;
    spec.kind_ = Kind::table;
    spec.points_ = std::move(points);
    return spec;
}

double NonlinearitySpec::eval(double y, EvalCounters* counters) const {
    switch (kind_) {
        case Kind::constant:
            return constant_;
        case Kind::builtin: {
            if (builtin_ != 2 && y < kEvalFloor) {
                y = kEvalFloor;
                if (counters) ++counters->clamps;
            }
            switch (builtin_) {
                case 1: return (y * y - 5.0 * y) * std::log(y);
                case 2: return y * (1.0 + std::exp(-y));
                default: return (7.0 - y) * std::exp(1.0 / y);
            }
        }
        case Kind::table: {
            if (y <= points_.front().first) {
                if (y < points_.front().first && counters) ++counters->extrapolations;
                return points_.front().second;
            }
            if (y >= points_.back().first) {
                if (y > points_.back().first && counters) ++counters->extrapolations;
                return points_.back().second;
            }
            const auto hi = std::upper_bound(
                points_.begin(), points_.end(), y,
                [](double value, const auto& p) { return value < p.first; });
            const auto lo = hi - 1;
            const double w = (y - lo->first) / (hi->first - lo->first);
            return lo->second + w * (hi->second - lo->second);
        }
    }
    throw DomainError("unreachable nonlinearity kind");
}

}  // namespace fracbvp
