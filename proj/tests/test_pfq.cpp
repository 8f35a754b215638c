#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "wrightkit/pfq.hpp"

using namespace wrightkit;

namespace {

// Direct Pochhammer products in long double, fixed term count.
long double pfq_brute(const std::vector<double>& up, const std::vector<double>& lo, long double x, int n = 400) {
    long double s = 0;
    for (int k = 0; k < n; ++k) {
        long double t = 1;
        for (int j = 0; j < k; ++j) {
            for (double u : up) t *= u + j;
            for (double l : lo) t /= l + j;
            t *= x / (j + 1);
        }
        s += t;
        if (t == 0 && k > 0) break;
    }
    return s;
}

std::vector<double> doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const Rational& r : v) out.push_back(r.to_double());
    return out;
}

}  // namespace

TEST(Pfq, ZeroArgumentIsExactlyOne) {
    EXPECT_EQ(pfq({{rat(1, 3)}, {rat(1, 2), rat(2, 3)}}, 0.0), 1.0);
}

TEST(Pfq, ElementaryCases) {
    EXPECT_NEAR(pfq({{}, {}}, 1.5), std::exp(1.5), 1e-14);
    EXPECT_NEAR(pfq({{}, {rat(1, 2)}}, -0.25), std::cos(1.0), 1e-15);   // 0F1(;1/2;-z^2/4) = cos z
    EXPECT_NEAR(pfq({{}, {rat(3, 2)}}, 2.25), std::sinh(3.0) / 3.0, 1e-14);
    EXPECT_NEAR(pfq({{rat(1, 2)}, {rat(3, 2)}}, -1.0), std::sqrt(kPi) / 2 * std::erf(1.0), 1e-15);
}

TEST(Pfq, FrozenValues) {
    EXPECT_NEAR(pfq({{}, {rat(1, 2), rat(3, 4)}}, -1.0 / 256.0), frozen::pfq_0f2_half_3q_at_m1_256, 1e-15);
    EXPECT_NEAR(pfq({{rat(5, 6)}, {rat(2, 3), rat(4, 3)}}, 4.0 / 27.0 * 3.375), frozen::pfq_1f2_sample, 1e-14);
}

TEST(Pfq, TerminatingSeriesIsAPolynomial) {
    // 1F1(-2; 1/2; x) = 1 - 4x + 4x^2/3
    for (double x : {-3.0, 0.5, 10.0})
        EXPECT_NEAR(pfq({{Rational(-2)}, {rat(1, 2)}}, x), 1 - 4 * x + 4 * x * x / 3, 1e-12 * (1 + x * x));
    // 2F0 with a terminating parameter is allowed
    EXPECT_NEAR(pfq({{Rational(-1), rat(1, 2)}, {}}, 2.0), 0.0, 1e-15);
}

TEST(Pfq, MatchesBruteForceOnRandomParameters) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(1, 12), den(1, 6), q(0, 3);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    for (int i = 0; i < 300; ++i) {
        PFQSpec s;
        const int nq = q(rng);
        const int np = std::uniform_int_distribution<int>(0, nq)(rng);
        for (int j = 0; j < np; ++j) s.upper.push_back(Rational(num(rng), den(rng)));
        for (int j = 0; j < nq; ++j) s.lower.push_back(Rational(num(rng), den(rng)));
        const double x = ux(rng);
        if (np == nq && std::fabs(x) >= 1.0) continue;
        const double expected = static_cast<double>(pfq_brute(doubles(s.upper), doubles(s.lower), x));
        EXPECT_NEAR(pfq(s, x), expected, 1e-12 * std::max(1.0, std::fabs(expected))) << pfq_label(s) << " x=" << x;
    }
}

TEST(Pfq, ParameterValidation) {
    EXPECT_THROW(pfq({{}, {Rational(-2)}}, 0.5), ParameterError);
    EXPECT_THROW(pfq({{rat(1, 2), rat(1, 3)}, {rat(1, 4)}}, 0.5), ParameterError);
    EXPECT_THROW(pfq({{rat(1, 2)}, {}}, 0.5), ParameterError);
    EXPECT_THROW(pfq({{}, {rat(1, 2)}}, INFINITY), DomainError);
}

TEST(Pfq, CancelParamsIsMultisetDifference) {
    const PFQSpec s = cancel_params({Rational(1), rat(1, 2), rat(1, 2)}, {rat(1, 2), Rational(1), rat(2, 3)});
    EXPECT_EQ(s.upper, std::vector<Rational>{rat(1, 2)});
    EXPECT_EQ(s.lower, std::vector<Rational>{rat(2, 3)});
}

TEST(Pfq, TermsFollowRecurrence) {
    const auto t = pfq_terms({{rat(1, 2)}, {rat(3, 2)}}, 2.0, 4);
    ASSERT_EQ(t.size(), 4u);
    EXPECT_DOUBLE_EQ(t[0], 1.0);
    EXPECT_DOUBLE_EQ(t[1], 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(t[2], 0.5 * 1.5 * 4.0 / (1.5 * 2.5 * 2.0));
}

TEST(Pfq, LabelRendering) {
    EXPECT_EQ(pfq_label({{}, {rat(1, 2), rat(3, 4)}}), "0F2[; 1/2, 3/4]");
    EXPECT_EQ(pfq_label({{Rational(-2)}, {rat(1, 2)}}), "1F1[-2; 1/2]");
}

TEST(Pfq, LargeArgumentStillConverges) {
    // 0F1(;1;x) = I_0(2 sqrt x)
    EXPECT_NEAR(pfq({{}, {Rational(1)}}, 100.0), std::cyl_bessel_i(0.0, 20.0), 1e-13 * std::cyl_bessel_i(0.0, 20.0));
}
