#pragma once

/**
 * @file poly_reduce.hpp
 * @brief Exact polynomial parts of the Wright function.
 *
 * bell_reduce: for a = -n and b = m (positive integers), W(-n, m | z) is the
 * residue of exp(xi + z xi^n) / xi^m at the origin, i.e.
 * B_{m-1}(g'(0), ..., g^{(m-1)}(0)) / (m-1)! with g(xi) = xi + z xi^n and B
 * the complete exponential Bell polynomial. B is built by the recurrence
 * B_{k+1} = sum_i C(k,i) B_{k-i} g^{(i+1)}(0), where every g^{(i)}(0) is a
 * polynomial of degree <= 1 in z.
 *
 * poly_part / poly_part_closed: the polynomial P_b(-a, z) added to the
 * hypergeometric sum when a = -n/m and b >= 1. The first follows the
 * integral recursion P_b = int_0^z P_{b-|a|} + [b integer]/(b-1)!, the second
 * sums the closed-form coefficients z^e / (e! f!) over the indices j for which
 * e = (j-b+1)/(1-|a|) and f = (b-1-|a| j)/(1-|a|) are both natural numbers.
 */

#include <vector>

#include "wrightkit/errors.hpp"
#include "wrightkit/polynomial.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

inline QPolynomial bell_reduce(const Rational& a, const Rational& b) {
    if (!(a.is_integer() && a.is_negative()) || !is_positive_integer(b))
        throw DomainError("bell_reduce needs a negative integer a and a positive integer b (got a = " + a.str() +
                          ", b = " + b.str() + ")");
    const auto n = -a.num();
    const auto order = b.num() - 1;  // B_{m-1}

    // g^{(i)}(0) for i = 1..order
    std::vector<QPolynomial> deriv(static_cast<std::size_t>(order) + 1);
    if (order >= 1) deriv[1] = QPolynomial::constant(1);
    if (n <= order) deriv[static_cast<std::size_t>(n)] += QPolynomial::monomial(1, factorial(n));

    std::vector<QPolynomial> bell{QPolynomial::constant(1)};
    for (Rational::int_type k = 0; k < order; ++k) {
        QPolynomial next;
        Rational binom(1);
        for (Rational::int_type i = 0; i <= k; ++i) {
            next += binom * (bell[static_cast<std::size_t>(k - i)] * deriv[static_cast<std::size_t>(i + 1)]);
            binom = binom * Rational(k - i) / Rational(i + 1);
        }
        bell.push_back(std::move(next));
    }
    return (Rational(1) / factorial(order)) * bell.back();
}

namespace detail {

inline Rational step_of(const Rational& a) {
    if (!(a.is_negative() && a >= Rational(-1)))
        throw DomainError("polynomial part needs -1 <= a < 0 (got a = " + a.str() + ")");
    return -a;
}

}  // namespace detail

/// P_b by the integral recursion, built bottom-up along b, b-|a|, b-2|a|, ...
inline QPolynomial poly_part(const Rational& a, const Rational& b) {
    const Rational step = detail::step_of(a);
    if (b < Rational(1)) return {};

    std::vector<Rational> chain;
    for (Rational c = b; c >= Rational(1); c -= step) chain.push_back(c);

    QPolynomial p;  // P at the first chain element below 1 is zero
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Rational& c = *it;
        if (c == Rational(1)) {
            p = QPolynomial::constant(1);
            continue;
        }
        p = p.integral();
        if (c.is_integer()) p += QPolynomial::constant(Rational(1) / factorial(c.num() - 1));
    }
    return p;
}

/// P_b from the closed-form coefficient set; requires |a| < 1.
inline QPolynomial poly_part_closed(const Rational& a, const Rational& b) {
    const Rational alpha = detail::step_of(a);
    if (alpha == Rational(1)) throw DomainError("closed-form polynomial coefficients need |a| < 1");
    QPolynomial p;
    if (b < Rational(1)) return p;

    const Rational one_minus = Rational(1) - alpha;
    const Rational bm1 = b - Rational(1);
    const auto j_lo = bm1.ceil();
    const auto j_hi = (bm1 / alpha).floor();
    for (auto j = j_lo; j <= j_hi; ++j) {
        const Rational e = (Rational(j) - bm1) / one_minus;
        const Rational f = (bm1 - alpha * Rational(j)) / one_minus;
        if (!e.is_integer() || !f.is_integer() || e.is_negative() || f.is_negative()) continue;
        p.add_term(static_cast<QPolynomial::exponent_type>(e.num()),
                   Rational(1) / (factorial(e.num()) * factorial(f.num())));
    }
    return p;
}

}  // namespace wrightkit
