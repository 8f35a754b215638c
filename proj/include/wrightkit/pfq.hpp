#pragma once

/**
 * @file pfq.hpp
 * @brief Generalized hypergeometric pFq with rational parameters.
 *
 * pFq(a; b | x) = sum_r x^r / r! * prod (a_j)_r / prod (b_j)_r, summed by
 * forward recurrence on the term ratio. Parameters stay rational until the
 * recurrence itself, so cancellation and termination are exact decisions.
 * Only the entire cases (p <= q) and terminating series are evaluated.
 */

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wrightkit/errors.hpp"
#include "wrightkit/kernel.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

struct PFQSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    std::size_t p() const { return upper.size(); }
    std::size_t q() const { return lower.size(); }

    /// True when some upper parameter is a nonpositive integer.
    bool terminates() const {
        return std::any_of(upper.begin(), upper.end(), [](const Rational& v) { return is_nonpositive_integer(v); });
    }

    friend bool operator==(const PFQSpec&, const PFQSpec&) = default;
};

/// Removes each parameter shared by both lists once from each side (multiset difference).
inline PFQSpec cancel_params(std::vector<Rational> upper, std::vector<Rational> lower) {
    PFQSpec out;
    for (const Rational& u : upper) {
        auto hit = std::find(lower.begin(), lower.end(), u);
        if (hit != lower.end())
            lower.erase(hit);
        else
            out.upper.push_back(u);
    }
    out.lower = std::move(lower);
    return out;
}

namespace detail {

inline void validate(const PFQSpec& spec) {
    for (const Rational& v : spec.lower)
        if (is_nonpositive_integer(v))
            throw ParameterError("pFq lower parameter " + v.str() + " is a nonpositive integer");
    if (spec.p() > spec.q() && !spec.terminates())
        throw ParameterError("pFq with p > q is outside the entire case (p = " + std::to_string(spec.p()) +
                             ", q = " + std::to_string(spec.q()) + ")");
}

inline double term_ratio(const std::vector<double>& up, const std::vector<double>& lo, double x, double r) {
    double num = x;
    for (double v : up) num *= v + r;
    double den = r + 1.0;
    for (double v : lo) den *= v + r;
    return num / den;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.push_back(r.to_double());
    return out;
}

}  // namespace detail

/// First n terms x^r/r! prod(a_j)_r / prod(b_j)_r as produced by the recurrence.
inline std::vector<double> pfq_terms(const PFQSpec& spec, double x, std::size_t n) {
    detail::validate(spec);
    const auto up = detail::to_doubles(spec.upper);
    const auto lo = detail::to_doubles(spec.lower);
    std::vector<double> terms;
    terms.reserve(n);
    double t = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        terms.push_back(t);
        t *= detail::term_ratio(up, lo, x, static_cast<double>(r));
    }
    return terms;
}

inline double pfq(const PFQSpec& spec, double x, double tol = 1e-15) {
    detail::validate(spec);
    if (x == 0.0) return 1.0;
    if (!std::isfinite(x)) throw DomainError("pFq argument must be finite");
    const auto up = detail::to_doubles(spec.upper);
    const auto lo = detail::to_doubles(spec.lower);

    CompensatedSum sum;
    SeriesMonitor monitor(tol);
    double t = 1.0;
    sum.add(t);
    monitor.converged_after(t, 1.0);
    for (std::size_t r = 0;; ++r) {
        const double rr = static_cast<double>(r);
        t *= detail::term_ratio(up, lo, x, rr);
        if (t == 0.0) break;  // an upper parameter reached zero
        sum.add(t);
        const bool small = monitor.converged_after(t, sum.value());
        // Only stop on the decreasing tail.
        if (small && std::fabs(detail::term_ratio(up, lo, x, rr + 1.0)) < 1.0) break;
    }
    return sum.value();
}

/// "pFq[u1, u2; l1, l2]" rendering used by text output.
inline std::string pfq_label(const PFQSpec& spec) {
    auto join = [](const std::vector<Rational>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += v[i].str();
        }
        return s;
    };
    return std::to_string(spec.p()) + "F" + std::to_string(spec.q()) + "[" + join(spec.upper) + "; " +
           join(spec.lower) + "]";
}

}  // namespace wrightkit
