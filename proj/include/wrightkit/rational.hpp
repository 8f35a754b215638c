#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals with 64-bit components and checked overflow.
 *
 * All parameter bookkeeping (a, b, pFq parameters, polynomial coefficients)
 * is done in this type so that integrality and pole decisions never depend
 * on floating point. Values are always reduced, the denominator is positive
 * and zero is uniquely 0/1. Results that do not fit in 64 bits raise
 * ArithmeticError instead of wrapping.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "wrightkit/errors.hpp"

namespace wrightkit {

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(int_type n, int_type d) { assign(n, d); }

    constexpr int_type num() const { return num_; }
    constexpr int_type den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }
    constexpr bool is_negative() const { return num_ < 0; }
    constexpr bool is_positive() const { return num_ > 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return from_wide(static_cast<wide>(x.num_) * y.den_ + static_cast<wide>(y.num_) * x.den_,
                         static_cast<wide>(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return from_wide(static_cast<wide>(x.num_) * y.den_ - static_cast<wide>(y.num_) * x.den_,
                         static_cast<wide>(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from_wide(static_cast<wide>(x.num_) * y.num_, static_cast<wide>(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw ArithmeticError("rational division by zero");
        return from_wide(static_cast<wide>(x.num_) * y.den_, static_cast<wide>(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        return static_cast<wide>(x.num_) * y.den_ <=> static_cast<wide>(y.num_) * x.den_;
    }

    /// Largest integer not above the value.
    int_type floor() const {
        int_type q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    int_type ceil() const {
        int_type q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    /// "num/den", or "num" when den == 1.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    using wide = __int128;

    int_type num_ = 0;
    int_type den_ = 1;

    static wide gcd_wide(wide x, wide y) {
        if (x < 0) x = -x;
        if (y < 0) y = -y;
        while (y != 0) {
            wide t = x % y;
            x = y;
            y = t;
        }
        return x;
    }

    static Rational from_wide(wide n, wide d) {
        if (d == 0) throw ArithmeticError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        wide g = gcd_wide(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        constexpr wide lo = std::numeric_limits<int_type>::min() + static_cast<wide>(1);
        constexpr wide hi = std::numeric_limits<int_type>::max();
        if (n < lo || n > hi || d > hi) throw ArithmeticError("rational overflow of 64-bit component");
        Rational r;
        r.num_ = static_cast<int_type>(n);
        r.den_ = static_cast<int_type>(d);
        return r;
    }

    void assign(int_type n, int_type d) { *this = from_wide(n, d); }
};

/// Reduced rational num/den; den == 0 is an error.
inline Rational rat(Rational::int_type num, Rational::int_type den) { return Rational(num, den); }

inline Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }

/// (n, m) with |a| = n/m in lowest terms.
inline std::pair<Rational::int_type, Rational::int_type> coprime_parts(const Rational& a) {
    if (a.is_zero()) throw DomainError("coprime_parts of zero");
    return {a.num() < 0 ? -a.num() : a.num(), a.den()};
}

inline bool is_nonpositive_integer(const Rational& x) { return x.is_integer() && x.num() <= 0; }
inline bool is_positive_integer(const Rational& x) { return x.is_integer() && x.num() > 0; }

/// Parses "p", "p/q", with optional leading sign on either part.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        if (!part.empty() && part.front() == '+') part.remove_prefix(1);
        Rational::int_type v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw ArithmeticError("malformed rational '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// k! as an exact rational; overflows (ArithmeticError) beyond 20!.
inline Rational factorial(Rational::int_type k) {
    Rational f(1);
    for (Rational::int_type i = 2; i <= k; ++i) f *= Rational(i);
    return f;
}

}  // namespace wrightkit
