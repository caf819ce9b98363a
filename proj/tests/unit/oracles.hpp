#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: a Stirling-series log-gamma (the library uses
// Lanczos), a term-by-term fractional-sum evaluator, and a deterministic
// random generator for property tests.

#include <cstdint>
#include <span>

namespace oracle {

struct SignedLog {
    long double log_abs;
    int sign;
};

/// ln|Gamma(x)| and sign via upward recurrence + Stirling series in long
/// double. Accurate to ~1e-18 relative on [-30, 30] away from poles.
SignedLog log_gamma(long double x);

double gamma(double x);

/// (1/Gamma(v)) sum_{j=0}^{k} (v-1+k-j)^(v-1) f_j, each kernel term computed
/// from raw Gamma log differences in long double.
double fractional_sum_term_by_term(std::span<const double> f, long double v,
                                   int k);

/// SplitMix64: deterministic across platforms, good enough for test data.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }
};

}  // namespace oracle
