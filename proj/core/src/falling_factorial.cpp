#include "fracbvp/falling_factorial.hpp"

#include "fracbvp/errors.hpp"
#include "fracbvp/gamma.hpp"

namespace fracbvp {

double falling_factorial(const Rational& t, const Rational& v) {
    if (v.is_integer() && v.num() >= 0) {
        double product = 1.0;
        for (std::int64_t i = 0; i < v.num(); ++i)
            product *= (t - Rational(i)).to_double();
        return product;
    }

    const Rational numerator_arg = t + Rational(1);
    const Rational denominator_arg = numerator_arg - v;

    const bool num_pole = is_nonpositive_integer(numerator_arg);
    const bool den_pole = is_nonpositive_integer(denominator_arg);

    if (den_pole && !num_pole) return 0.0;
    if (num_pole && !den_pole)
        throw PoleError("falling factorial pole: Gamma(" + numerator_arg.str() +
                        ") is infinite while Gamma(" + denominator_arg.str() +
                        ") is not");

    if (v.is_integer()) {
        // v < 0 here (v >= 0 handled above). Both-pole ratios reduce to the
        // finite reciprocal rising product; single poles were screened off.
        double product = 1.0;
        for (std::int64_t i = 1; i <= -v.num(); ++i)
            product *= (t + Rational(i)).to_double();
        return 1.0 / product;
    }

    const SignedLogGamma n = signed_log_gamma(numerator_arg.to_double());
    const SignedLogGamma d = signed_log_gamma(denominator_arg.to_double());
    return n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
}

}  // namespace fracbvp
