#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fracbvp/rational.hpp"

namespace fracbvp {

/// Arithmetic grid {base, base+1, base+2, ...} of a fixed length. The base
/// may be a non-integer rational (e.g. v-2), and point k is base + k exactly.
class Grid {
public:
    Grid(Rational base, int length);

    const Rational& base() const { return base_; }
    int length() const { return length_; }

    Rational point(int k) const;

    /// Index of the exact rational t on this grid, or nullopt if t is not
    /// a grid point.
    std::optional<int> index_of(const Rational& t) const;

    friend bool operator==(const Grid& a, const Grid& b) = default;

private:
    Rational base_;
    int length_;
};

/// Real values attached to a Grid, one per point. Values are immutable after
/// construction and required to be finite.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<double> values);

    static GridFunction constant(const Grid& grid, double c);
    static GridFunction sample(const Grid& grid,
                               const std::function<double(Rational)>& fn);

    const Grid& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }

    double operator[](int k) const { return values_[static_cast<size_t>(k)]; }
    int length() const { return grid_.length(); }

    /// Max-norm over the whole grid.
    double max_abs() const;

private:
    Grid grid_;
    std::vector<double> values_;
};

}  // namespace fracbvp
