#pragma once

/**
 * @file decompose.hpp
 * @brief Finite hypergeometric decomposition of W(a,b|z) for rational a.
 *
 * Splitting the series index as k = m p + r (r = 0..m-1) turns each residue
 * class into one pFq in the variable z^m:
 *
 *   a = n/m > 0:   z^r / (r! Gamma(b+ar)) * 1F(n+m)[1; (b+ar+j)/n, (r+1+j)/m](z^m / (n^n m^m))
 *   a = -n/m < 0:  z^r / (r! Gamma(b+ar)) * (n+1)Fm[1, 1+r/m-(b+j)/n; (r+1+j)/m]((-1)^n n^n z^m / m^m)
 *
 * For a < 0 the second form comes from the reflection formula, which needs
 * b+ar to be a non-integer. Residues with b+ar a nonpositive integer vanish;
 * residues with b+ar a positive integer (only possible for b >= 1) are finite
 * sums and are carried exactly by the polynomial part P_b instead.
 *
 * For a > 0 a residue with b+ar a nonpositive integer is not zero: its first
 * few terms sit on gamma poles. The term is re-anchored at the first index
 * p0 with b+ar+n p0 > 0, i.e. its prefactor becomes z^k0/(k0! Gamma(b+a k0))
 * with k0 = r + m p0. The same parameter formulas then apply with r -> k0.
 *
 * The whole decomposition is exact rational data; floating point only enters
 * in eval_decomposition.
 */

#include <cmath>
#include <string>
#include <vector>

#include "wrightkit/errors.hpp"
#include "wrightkit/kernel.hpp"
#include "wrightkit/pfq.hpp"
#include "wrightkit/poly_reduce.hpp"
#include "wrightkit/polynomial.hpp"
#include "wrightkit/rational.hpp"
#include "wrightkit/series.hpp"

namespace wrightkit {

/// Argument scale used for a < 0 terms.
enum class SecondTypeScale {
    reflected,  ///< n^n / m^m, what the reflection step produces
    inverted,   ///< 1 / (n^n m^m), kept only to demonstrate that it is wrong for n >= 2
};

struct HGTerm {
    int r = 0;        ///< residue index, 0 <= r < m
    int z_power = 0;  ///< power of z in the prefactor; equals r unless re-anchored past gamma poles
    Rational gamma_arg;
    PFQSpec pfq;
    int arg_sign = 1;
    Rational arg_scale = Rational(1);
    int arg_zpower = 1;

    friend bool operator==(const HGTerm&, const HGTerm&) = default;
};

struct Decomposition {
    WrightSpec spec;
    std::vector<HGTerm> terms;
    QPolynomial poly;

    bool is_zero() const { return terms.empty() && poly.is_zero(); }
};

namespace detail {

inline Rational int_pow(Rational::int_type base, Rational::int_type e) {
    Rational out(1);
    for (Rational::int_type i = 0; i < e; ++i) out *= Rational(base);
    return out;
}

inline int narrow(Rational::int_type v) {
    if (v > 1'000'000 || v < -1'000'000) throw DomainError("index too large for decomposition");
    return static_cast<int>(v);
}

inline Decomposition decompose_positive(const WrightSpec& spec) {
    const auto [n, m] = coprime_parts(spec.a);
    Decomposition d{spec, {}, {}};
    const Rational scale = Rational(1) / (int_pow(n, n) * int_pow(m, m));
    for (Rational::int_type r = 0; r < m; ++r) {
        Rational k0(r);
        Rational c = spec.b + spec.a * k0;
        if (is_nonpositive_integer(c)) {
            const auto p0 = (-c).num() / n + 1;
            k0 += Rational(m * p0);
            c += Rational(n * p0);
        }
        std::vector<Rational> lower;
        for (Rational::int_type j = 0; j < n; ++j) lower.push_back((c + Rational(j)) / Rational(n));
        for (Rational::int_type j = 0; j < m; ++j) lower.push_back((k0 + Rational(1 + j)) / Rational(m));
        HGTerm t;
        t.r = narrow(r);
        t.z_power = narrow(k0.num());
        t.gamma_arg = c;
        t.pfq = cancel_params({Rational(1)}, std::move(lower));
        t.arg_sign = 1;
        t.arg_scale = scale;
        t.arg_zpower = narrow(m);
        d.terms.push_back(std::move(t));
    }
    return d;
}

inline Decomposition decompose_negative(const WrightSpec& spec, SecondTypeScale scale_rule) {
    const auto [n, m] = coprime_parts(spec.a);
    Decomposition d{spec, {}, {}};
    const Rational scale = scale_rule == SecondTypeScale::reflected ? int_pow(n, n) / int_pow(m, m)
                                                                     : Rational(1) / (int_pow(n, n) * int_pow(m, m));
    const int sign = (n % 2 == 0) ? 1 : -1;
    for (Rational::int_type r = 0; r < m; ++r) {
        const Rational c = spec.b + spec.a * Rational(r);
        if (c.is_integer()) continue;
        std::vector<Rational> upper{Rational(1)};
        for (Rational::int_type j = 0; j < n; ++j)
            upper.push_back(Rational(1) + Rational(r, m) - (spec.b + Rational(j)) / Rational(n));
        std::vector<Rational> lower;
        for (Rational::int_type j = 0; j < m; ++j) lower.push_back(Rational(r + 1 + j, m));
        HGTerm t;
        t.r = narrow(r);
        t.z_power = narrow(r);
        t.gamma_arg = c;
        t.pfq = cancel_params(std::move(upper), std::move(lower));
        t.arg_sign = sign;
        t.arg_scale = scale;
        t.arg_zpower = narrow(m);
        d.terms.push_back(std::move(t));
    }
    if (spec.b >= Rational(1)) d.poly = poly_part(spec.a, spec.b);
    return d;
}

}  // namespace detail

inline Decomposition decompose(const Rational& a, const Rational& b,
                               SecondTypeScale scale_rule = SecondTypeScale::reflected) {
    const WrightSpec spec = classify(a, b);
    switch (spec.kind) {
        case WrightKind::Unsupported:
            throw DomainError(unsupported_reason(spec));
        case WrightKind::IdenticallyZero:
            return {spec, {}, {}};
        case WrightKind::NegIntegerPolynomial: {
            if (is_positive_integer(b)) return {spec, {}, bell_reduce(a, b)};
            // a = -1, non-integer b: (1+z)^(b-1)/Gamma(b) as 1F0(1-b;;-z)
            HGTerm t;
            t.gamma_arg = b;
            t.pfq = PFQSpec{{Rational(1) - b}, {}};
            t.arg_sign = -1;
            return {spec, {t}, {}};
        }
        case WrightKind::FirstType:
            if (a.is_zero()) {
                HGTerm t;  // e^z / Gamma(b) as 0F0
                t.gamma_arg = b;
                return {spec, {t}, {}};
            }
            return detail::decompose_positive(spec);
        case WrightKind::SecondType:
            return detail::decompose_negative(spec, scale_rule);
    }
    throw DomainError(unsupported_reason(spec));
}

/// The pFq argument of a term at z.
inline double term_argument(const HGTerm& t, double z) {
    return t.arg_sign * t.arg_scale.to_double() * std::pow(z, t.arg_zpower);
}

/// z^k / (k! Gamma(gamma_arg)).
inline double term_prefactor(const HGTerm& t, double z) {
    double p = rgamma(t.gamma_arg);
    for (int k = 1; k <= t.z_power; ++k) p *= z / k;
    return p;
}

namespace detail {

inline double term_hypergeometric(const HGTerm& t, double x, double tol) {
    const PFQSpec& s = t.pfq;
    if (s.p() == 1 && s.q() == 0 && !s.terminates()) {
        // 1F0(u;;x) = (1-x)^(-u), real only for x < 1
        if (!(x < 1.0)) throw DomainError("binomial 1F0 term needs argument < 1 (z > -1 for a = -1)");
        return std::pow(1.0 - x, -s.upper.front().to_double());
    }
    return pfq(s, x, tol);
}

}  // namespace detail

inline double eval_decomposition(const Decomposition& d, double z, double tol = 1e-15) {
    if (!std::isfinite(z)) throw DomainError("z must be finite");
    CompensatedSum sum;
    for (const HGTerm& t : d.terms) {
        const double pre = term_prefactor(t, z);
        if (pre == 0.0) continue;
        sum.add(pre * detail::term_hypergeometric(t, term_argument(t, z), tol));
    }
    if (!d.poly.is_zero()) sum.add(d.poly.eval(z));
    return sum.value();
}

/// Evaluates W(a,b|z) by the best exact or finite route for the parameters.
inline double wright(const Rational& a, const Rational& b, double z, double tol = 1e-15) {
    const WrightSpec spec = classify(a, b);
    switch (spec.kind) {
        case WrightKind::Unsupported:
            throw DomainError(unsupported_reason(spec));
        case WrightKind::IdenticallyZero:
            return 0.0;
        case WrightKind::NegIntegerPolynomial:
            if (is_positive_integer(b)) return bell_reduce(a, b).eval(z);
            if (!(z > -1.0)) throw DomainError("W(-1, b | z) with non-integer b needs z > -1");
            return std::pow(1.0 + z, (b - Rational(1)).to_double()) * rgamma(b);
        default:
            return eval_decomposition(decompose(a, b), z, tol);
    }
}

}  // namespace wrightkit
