#pragma once

/**
 * @file series.hpp
 * @brief Parameter classification and the defining-series oracle.
 *
 * W(a,b|z) = sum_k z^k / (k! Gamma(a k + b)). Each reciprocal gamma factor is
 * evaluated on the exact rational a k + b, so terms sitting on a gamma pole
 * vanish exactly; this is also what makes the series finite for negative
 * integer a with positive integer b.
 *
 * z^k/k! and the running sum are carried in long double; for z < 0 the
 * alternating cancellation otherwise eats the last digits the oracle owes.
 */

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "wrightkit/errors.hpp"
#include "wrightkit/kernel.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

enum class WrightKind {
    FirstType,             ///< a >= 0
    SecondType,            ///< -1 < a < 0
    NegIntegerPolynomial,  ///< a = -1 (any b), or a < -1 integer with b a positive integer
    IdenticallyZero,       ///< a zero or negative integer, b a nonpositive integer
    Unsupported,           ///< a <= -1 non-integer, or a < -1 integer with non-integer b
};

inline std::string_view kind_name(WrightKind k) {
    switch (k) {
        case WrightKind::FirstType: return "FirstType";
        case WrightKind::SecondType: return "SecondType";
        case WrightKind::NegIntegerPolynomial: return "NegIntegerPolynomial";
        case WrightKind::IdenticallyZero: return "IdenticallyZero";
        case WrightKind::Unsupported: return "Unsupported";
    }
    return "Unsupported";
}

struct WrightSpec {
    Rational a;
    Rational b;
    WrightKind kind = WrightKind::Unsupported;

    friend bool operator==(const WrightSpec&, const WrightSpec&) = default;
};

inline WrightSpec classify(const Rational& a, const Rational& b) {
    WrightKind kind = WrightKind::Unsupported;
    if (a.is_zero()) {
        kind = is_nonpositive_integer(b) ? WrightKind::IdenticallyZero : WrightKind::FirstType;
    } else if (a.is_positive()) {
        kind = WrightKind::FirstType;
    } else if (a > Rational(-1)) {
        kind = WrightKind::SecondType;
    } else if (a.is_integer()) {
        if (is_nonpositive_integer(b))
            kind = WrightKind::IdenticallyZero;
        else if (a == Rational(-1) || is_positive_integer(b))
            kind = WrightKind::NegIntegerPolynomial;
    }
    return {a, b, kind};
}

/// Human-readable reason a classification is unsupported.
inline std::string unsupported_reason(const WrightSpec& s) {
    if (!s.a.is_integer()) return "unsupported: a ≤ −1 non-integer (a = " + s.a.str() + ")";
    return "unsupported: a < −1 integer requires integer b (a = " + s.a.str() + ", b = " + s.b.str() + ")";
}

struct SeriesResult {
    double value = 0.0;
    /// sum|term| / |sum term|; 1 for an exact zero sum of zero terms.
    double condition = 1.0;
    std::size_t terms = 0;
};

/// Defining-series summation with compensated accumulation and condition estimate.
inline SeriesResult wright_series_detailed(const Rational& a, const Rational& b, double z, double tol = 1e-14) {
    if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
    if (!std::isfinite(z)) throw DomainError("z must be finite");
    const WrightSpec spec = classify(a, b);
    if (spec.kind == WrightKind::Unsupported) throw DomainError(unsupported_reason(spec));
    if (spec.kind == WrightKind::IdenticallyZero) return {0.0, 1.0, 0};
    if (z == 0.0) return {rgamma(b), 1.0, 1};

    // a and b both integers with a < 0: only finitely many terms avoid the poles.
    const bool finite = a.is_negative() && a.is_integer() && b.is_integer();
    const double log_abs_z = std::log(std::fabs(z));

    BasicCompensatedSum<long double> sum;
    SeriesMonitor monitor(tol);
    long double power = 1.0L;  // z^k / k!
    for (Rational::int_type k = 0;; ++k) {
        const Rational x = a * Rational(k) + b;
        if (finite && x <= Rational(0)) break;
        if (is_nonpositive_integer(x)) {
            monitor.skip();
        } else {
            long double term;
            if (power != 0.0L && std::isfinite(power) && std::fabs(x.to_double()) <= 160.0) {
                term = power * rgamma(x);
            } else {
                const LogRgamma lr = log_rgamma(x);
                const double log_power = static_cast<double>(k) * log_abs_z - std::lgamma(static_cast<double>(k) + 1.0);
                const int sign = (z < 0.0 && (k % 2 != 0)) ? -lr.sign : lr.sign;
                term = sign * std::exp(static_cast<long double>(log_power + lr.log_abs));
            }
            sum.add(term);
            if (monitor.converged_after(static_cast<double>(term), static_cast<double>(sum.value()))) break;
        }
        power *= static_cast<long double>(z) / static_cast<long double>(k + 1);
    }

    SeriesResult out;
    out.value = static_cast<double>(sum.value());
    out.terms = monitor.count();
    if (out.value != 0.0)
        out.condition = static_cast<double>(sum.magnitude() / std::fabs(sum.value()));
    else
        out.condition = sum.magnitude() == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return out;
}

inline double wright_series(const Rational& a, const Rational& b, double z, double tol = 1e-14) {
    return wright_series_detailed(a, b, z, tol).value;
}

}  // namespace wrightkit
