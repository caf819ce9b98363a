#include "fracbvp/grid.hpp"

#include <cmath>

#include "fracbvp/errors.hpp"

namespace fracbvp {

Grid::Grid(Rational base, int length) : base_(base), length_(length) {
    if (length < 1) throw DomainError("grid length must be positive");
}

Rational Grid::point(int k) const {
    if (k < 0 || k >= length_) throw DomainError("grid index out of range");
    return base_ + Rational(k);
}

std::optional<int> Grid::index_of(const Rational& t) const {
    const Rational offset = t - base_;
    if (!offset.is_integer()) return std::nullopt;
    const std::int64_t k = offset.num();
    if (k < 0 || k >= length_) return std::nullopt;
    return static_cast<int>(k);
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.length())
        throw DomainError("grid function value count does not match grid length");
    for (double v : values_)
        if (!std::isfinite(v))
            throw NonfiniteValue("grid function value is not finite");
}

GridFunction GridFunction::constant(const Grid& grid, double c) {
    return GridFunction(grid, std::vector<double>(grid.length(), c));
}

GridFunction GridFunction::sample(const Grid& grid,
                                  const std::function<double(Rational)>& fn) {
    std::vector<double> values;
    values.reserve(grid.length());
    for (int k = 0; k < grid.length(); ++k) values.push_back(fn(grid.point(k)));
    return GridFunction(grid, std::move(values));
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

}  // namespace fracbvp
