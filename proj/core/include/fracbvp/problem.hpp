#pragma once

#include "fracbvp/green.hpp"
#include "fracbvp/grid.hpp"
#include "fracbvp/nonlinearity.hpp"

namespace fracbvp {

/// A full boundary value problem instance:
///
///   -D^v y(t) = lambda * h(t+v-1) * f(y(t+v-1)),   t in {0, ..., b},
///   y(v-2) = 0,  Dy(v-2) = Dy(v+b-1).
///
/// h lives on [v-1, v+b] with b+2 nonnegative values. lambda >= 0; the
/// config layer additionally requires lambda > 0.
struct Problem {
    BvpShape shape;
    double lambda;
    GridFunction h;
    NonlinearitySpec f;

    Problem(BvpShape shape, double lambda, GridFunction h, NonlinearitySpec f);
};

}  // namespace fracbvp
