#pragma once

/**
 * @file reference.hpp
 * @brief Closed-form identities for particular (a, b), used as numeric oracles.
 *
 * Each case evaluates W(a, b | s z) for a fixed sign s from elementary and
 * special functions only (kernel.hpp); none of them touches the series or
 * the hypergeometric machinery. The catalog transcribes published identities
 * and the verification suite checks every one of them against both
 * evaluation routes.
 */

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrightkit/decompose.hpp"
#include "wrightkit/errors.hpp"
#include "wrightkit/kernel.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

struct ReferenceCase {
    std::string_view id;
    Rational a;
    Rational b;
    /// The identity is stated for W(a, b | arg_sign * z).
    int arg_sign = 1;
    double domain_lo = -std::numeric_limits<double>::infinity();
    double domain_hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    /// Window the verification suite samples.
    double sample_lo = 0.0;
    double sample_hi = 0.0;
    double (*eval)(double z) = nullptr;
    std::string_view anchor;

    bool in_domain(double z) const {
        if (!(z <= domain_hi)) return false;
        return lo_open ? z > domain_lo : z >= domain_lo;
    }

    /// n evenly spaced points of the sampling window; the open end is excluded.
    std::vector<double> sample_points(int n = 20) const {
        std::vector<double> pts;
        for (int i = 0; i < n; ++i) {
            const double t = lo_open ? static_cast<double>(i + 1) / n : static_cast<double>(i) / (n - 1);
            pts.push_back(sample_lo + (sample_hi - sample_lo) * t);
        }
        return pts;
    }
};

namespace refdetail {

inline const double kCbrt3 = std::cbrt(3.0);
inline const double kSqrt3 = std::sqrt(3.0);
inline const double kSqrt2 = std::sqrt(2.0);

inline double erfc_case(double z) { return erfc(-z / 2.0); }

inline double gauss_case(double z) { return -z / 2.0 * std::exp(-z * z / 4.0) / kSqrtPi; }

inline double airy_case(double z) { return kCbrt3 * kCbrt3 * airy_ai(z / kCbrt3); }

inline double airy_d_case(double z) { return -kCbrt3 * airy_ai_prime(z / kCbrt3); }

inline double k14_case(double z) {
    const double x = z * z / 8.0;
    return std::sqrt(z) * std::exp(-x) * bessel_k(rat(1, 4), x) / (kSqrt2 * kPi);
}

inline double k13_case(double z) {
    const double x = 2.0 * z * z * z / 27.0;
    return z * std::exp(x) * bessel_k(rat(1, 3), x) / (kSqrt3 * kPi);
}

inline double m23_case(double z) {
    const double x = z * z / std::pow(3.0, 4.0 / 3.0);
    return -std::exp(2.0 * z * z * z / 27.0) * (3.0 * airy_ai_prime(x) + kCbrt3 * z * airy_ai(x)) /
           (kCbrt3 * kCbrt3);
}

inline double pow_case(double z) { return (1.0 + z) * (1.0 + z) / 2.0; }

inline double erf72_case(double z) {
    const double z2 = z * z;
    const double gaussian = (z2 * z2 / 60.0 + 3.0 * z2 / 10.0 + 8.0 / 15.0) * std::exp(-z2 / 4.0) / kSqrtPi;
    return gaussian + (1.0 + erf(z / 2.0)) * (z2 * z2 * z / 120.0 + z2 * z / 6.0 + z / 2.0);
}

constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace refdetail

/// The catalog, in a fixed order.
inline std::span<const ReferenceCase> reference_cases() {
    using namespace refdetail;
    static const std::vector<ReferenceCase> cases = {
        {"ERFC", rat(-1, 2), 1, 1, -inf, inf, false, -4.0, 4.0, &erfc_case, "a=-1/2, b=1: erfc(-z/2)"},
        {"GAUSS", rat(-1, 2), 0, 1, -inf, inf, false, -5.0, 5.0, &gauss_case,
         "a=-1/2, b=0: first derivative of exp(-z^2/4)/sqrt(pi)"},
        {"AIRY", rat(-1, 3), rat(2, 3), -1, 0.0, 20.0, false, 0.0, 5.0, &airy_case,
         "a=-1/3, b=2/3 at -z: 3^(2/3) Ai(z/3^(1/3))"},
        {"AIRY-D", rat(-1, 3), rat(1, 3), -1, 0.0, 20.0, false, 0.0, 5.0, &airy_d_case,
         "a=-1/3, b=1/3 at -z: -3^(1/3) Ai'(z/3^(1/3))"},
        {"K14", rat(-1, 4), rat(3, 4), -1, 0.0, inf, true, 0.0, 4.0, &k14_case,
         "a=-1/4, b=3/4 at -z: sqrt(z) exp(-z^2/8) K_{1/4}(z^2/8)/(sqrt(2) pi)"},
        {"K13", rat(-2, 3), rat(2, 3), 1, 0.0, inf, true, 0.0, 4.0, &k13_case,
         "a=-2/3, b=2/3: z exp(2z^3/27) K_{1/3}(2z^3/27)/(sqrt(3) pi)"},
        {"M23", rat(-2, 3), rat(1, 3), 1, 0.0, 8.0, true, 0.0, 4.0, &m23_case,
         "a=-2/3, b=1/3: -exp(2z^3/27)(3 Ai'(x) + 3^(1/3) z Ai(x))/3^(2/3), x = z^2/3^(4/3)"},
        {"POW", -1, 3, 1, -1.0, inf, true, -1.0, 3.0, &pow_case, "a=-1, b=3: (1+z)^(b-1)/Gamma(b)"},
        {"ERF72", rat(-1, 2), rat(7, 2), 1, -inf, inf, false, -4.0, 4.0, &erf72_case,
         "a=-1/2, b=7/2: Gaussian times quartic plus (1+erf(z/2)) times the polynomial part"},
    };
    return cases;
}

inline const ReferenceCase& reference_case(std::string_view id) {
    for (const ReferenceCase& c : reference_cases())
        if (c.id == id) return c;
    throw UsageError("unknown reference case '" + std::string(id) + "'");
}

/// First catalog entry for (a, b), or nullptr.
inline const ReferenceCase* find_reference_case(const Rational& a, const Rational& b) {
    for (const ReferenceCase& c : reference_cases())
        if (c.a == a && c.b == b) return &c;
    return nullptr;
}

/// Closed-form value of W(a, b | arg_sign * z) for the named case.
inline double reference_eval(std::string_view id, double z) {
    const ReferenceCase& c = reference_case(id);
    if (!c.in_domain(z)) throw RangeError("z = " + std::to_string(z) + " outside the domain of case " + std::string(id));
    return c.eval(z);
}

/// M_alpha(z) = W(-alpha, 1 - alpha | -z).
inline double mainardi(const Rational& alpha, double z, double tol = 1e-15) {
    return wright(-alpha, Rational(1) - alpha, -z, tol);
}

}  // namespace wrightkit
