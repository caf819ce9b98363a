#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fracbvp {

/// Exact rational scalar. Grid coordinates and difference orders are kept
/// rational end-to-end so that Gamma-pole detection is exact rather than
/// tolerance-based; only function *values* are floating-point.
///
/// Invariants: denominator > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    /// Parses "p/q" or "p". Throws DomainError on malformed input.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    std::int64_t floor() const;
    std::int64_t ceil() const;

    double to_double() const;

    /// Canonical text form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a,
                                            const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    void normalize();
};

/// True iff q is an integer <= 0, i.e. a pole of the Gamma function at q.
bool is_nonpositive_integer(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace fracbvp
