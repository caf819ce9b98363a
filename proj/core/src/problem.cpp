#include "fracbvp/problem.hpp"

#include <cmath>

#include "fracbvp/errors.hpp"

namespace fracbvp {

Problem::Problem(BvpShape shape_, double lambda_, GridFunction h_,
                 NonlinearitySpec f_)
    : shape(shape_), lambda(lambda_), h(std::move(h_)), f(std::move(f_)) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ValidationError("lambda", "must be a finite nonnegative number");
    if (h.grid() != shape.weight_grid())
        throw ValidationError("h", "must live on [v-1, v+b] with b+2 values");
    for (double value : h.values())
        if (value < 0.0) throw ValidationError("h", "values must be nonnegative");
}

}  // namespace fracbvp
