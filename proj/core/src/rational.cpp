#include "fracbvp/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "fracbvp/errors.hpp"

namespace fracbvp {

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DomainError("invalid rational '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const std::int64_t n = parse_int(text.substr(0, slash), text);
    const std::int64_t d = parse_int(text.substr(slash + 1), text);
    if (d == 0) throw DomainError("invalid rational '" + std::string(text) + "': zero denominator");
    return Rational(n, d);
}

std::int64_t Rational::floor() const {
    const std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
}

std::int64_t Rational::ceil() const {
    const std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        const unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Cross-multiplied arithmetic runs in 128 bits, reduces, then narrows; only
// a result that genuinely does not fit 64 bits is an error.
Rational reduced(__int128 num, __int128 den) {
    if (num == 0) return Rational(0);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const unsigned __int128 mag =
        num < 0 ? static_cast<unsigned __int128>(-num)
                : static_cast<unsigned __int128>(num);
    const unsigned __int128 g = gcd128(mag, static_cast<unsigned __int128>(den));
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw DomainError("rational overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
    return reduced(static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return reduced(static_cast<__int128>(a.num_) * b.den_ -
                       static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return reduced(static_cast<__int128>(a.num_) * b.num_,
                   static_cast<__int128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiply in 128-bit so comparisons never overflow.
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool is_nonpositive_integer(const Rational& q) {
    return q.den() == 1 && q.num() <= 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace fracbvp
