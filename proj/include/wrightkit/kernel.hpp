#pragma once

/**
 * @file kernel.hpp
 * @brief Real special-function kernel and series bookkeeping.
 *
 * Gamma, reciprocal gamma, erf/erfc, Airy Ai/Ai' and modified Bessel I/K are
 * thin contracts over Boost.Math: the wrappers own the pole, range and
 * order checks, Boost owns the numerics. Reciprocal gamma takes a Rational
 * so that its zeros are decided exactly.
 *
 * The series helpers (CompensatedSum, SeriesMonitor) implement the shared
 * truncation policy: stop once three consecutive terms satisfy
 * |term| <= tol * (|partial sum| + 1e-300), fail after max_terms() terms.
 */

#include <cmath>
#include <cstdlib>
#include <limits>
#include <span>
#include <string>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "wrightkit/errors.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

namespace detail {

using boost_policy = boost::math::policies::policy<
    boost::math::policies::overflow_error<boost::math::policies::ignore_error>,
    boost::math::policies::underflow_error<boost::math::policies::ignore_error>>;

inline double checked(double v, const char* what) {
    if (std::isnan(v)) throw RangeError(std::string(what) + " produced NaN");
    return v;
}

}  // namespace detail

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145183;
inline constexpr double kTiny = 1e-300;
inline constexpr std::size_t kDefaultMaxTerms = 100000;

/// Term cap for every series; WRIGHTKIT_MAX_TERMS overrides the default.
inline std::size_t max_terms() {
    if (const char* env = std::getenv("WRIGHTKIT_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxTerms;
}

/// Gamma function; PoleError within 1e-12 of a nonpositive integer.
inline double gamma(double x) {
    if (std::isnan(x)) throw RangeError("gamma of NaN");
    double nearest = std::nearbyint(x);
    if (nearest <= 0.0 && std::fabs(x - nearest) <= 1e-12)
        throw PoleError("gamma pole at x = " + std::to_string(x));
    return detail::checked(boost::math::tgamma(x, detail::boost_policy()), "gamma");
}

/// 1/Gamma(x). Exactly 0.0 at nonpositive integers.
inline double rgamma(const Rational& x) {
    if (is_nonpositive_integer(x)) return 0.0;
    const double xd = x.to_double();
    if (xd > 170.0) {
        return std::exp(-boost::math::lgamma(xd, detail::boost_policy()));
    }
    if (xd < -170.0) {
        // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
        double s = boost::math::sin_pi(xd);
        return std::exp(boost::math::lgamma(1.0 - xd, detail::boost_policy())) * s / kPi;
    }
    return 1.0 / boost::math::tgamma(xd, detail::boost_policy());
}

/// log|1/Gamma(x)| and the sign of 1/Gamma(x); sign 0 at the zeros.
struct LogRgamma {
    double log_abs;
    int sign;
};

inline LogRgamma log_rgamma(const Rational& x) {
    if (is_nonpositive_integer(x)) return {-std::numeric_limits<double>::infinity(), 0};
    int s = 1;
    double lg = boost::math::lgamma(x.to_double(), &s, detail::boost_policy());
    return {-lg, s};
}

inline double erf(double x) { return detail::checked(boost::math::erf(x), "erf"); }
inline double erfc(double x) { return detail::checked(boost::math::erfc(x), "erfc"); }

inline double airy_ai(double x) {
    if (!(std::fabs(x) <= 15.0)) throw RangeError("airy_ai argument outside |x| <= 15");
    return detail::checked(boost::math::airy_ai(x), "airy_ai");
}

inline double airy_ai_prime(double x) {
    if (!(std::fabs(x) <= 15.0)) throw RangeError("airy_ai_prime argument outside |x| <= 15");
    return detail::checked(boost::math::airy_ai_prime(x), "airy_ai_prime");
}

/// Modified Bessel function of the first kind I_nu(x), x > 0.
inline double bessel_i(const Rational& nu, double x) {
    if (!(x > 0.0)) throw RangeError("bessel_i requires x > 0");
    return detail::checked(boost::math::cyl_bessel_i(nu.to_double(), x), "bessel_i");
}

/// Modified Bessel function of the second kind K_nu(x), x > 0, non-integer nu.
inline double bessel_k(const Rational& nu, double x) {
    if (nu.is_integer()) throw UnsupportedOrder("bessel_k supports non-integer orders only");
    if (!(x > 0.0)) throw RangeError("bessel_k requires x > 0");
    return detail::checked(boost::math::cyl_bessel_k(abs(nu).to_double(), x), "bessel_k");
}

/// Neumaier's compensated accumulator.
template <class T>
class BasicCompensatedSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_sum_ += std::fabs(x);
    }
    T value() const { return sum_ + comp_; }
    /// Sum of |terms| seen so far.
    T magnitude() const { return abs_sum_; }

private:
    T sum_ = 0;
    T comp_ = 0;
    T abs_sum_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

inline double comp_sum(std::span<const double> terms) {
    CompensatedSum s;
    for (double t : terms) s.add(t);
    return s.value();
}

/// Truncation bookkeeping shared by every series in the library.
class SeriesMonitor {
public:
    explicit SeriesMonitor(double tol, std::size_t cap = max_terms()) : tol_(tol), cap_(cap) {}

    /// Records one term against the running sum; true once the series may stop.
    bool converged_after(double term, double partial_sum) {
        if (!std::isfinite(term)) throw ConvergenceError("series produced a non-finite term");
        if (++count_ > cap_)
            throw ConvergenceError("series did not converge within " + std::to_string(cap_) + " terms");
        if (std::fabs(term) <= tol_ * (std::fabs(partial_sum) + kTiny)) {
            ++small_run_;
        } else {
            small_run_ = 0;
        }
        return small_run_ >= 3;
    }

    /// Counts a term that is structurally zero without touching the small-term run.
    void skip() {
        if (++count_ > cap_)
            throw ConvergenceError("series did not converge within " + std::to_string(cap_) + " terms");
    }

    std::size_t count() const { return count_; }

private:
    double tol_;
    std::size_t cap_;
    std::size_t count_ = 0;
    int small_run_ = 0;
};

}  // namespace wrightkit
