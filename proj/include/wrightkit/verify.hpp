#pragma once

/**
 * @file verify.hpp
 * @brief Batch cross-route verification with a deterministic JSON report.
 *
 * Suites:
 *   bell-table       Bell reduction against the published W(-n, m) table (exact)
 *   poly-dual        integral recursion against closed-form coefficients (exact)
 *   oracle-grid      decomposition route against the defining series
 *   reference-forms  closed forms against both evaluation routes
 *   calculus         derivative and integral closure by finite differences/quadrature
 *   all              every suite above, in this order
 *
 * A numeric record passes when rel_err <= rel or abs_err <= abs (abs = 1e-12).
 * Oracle points whose series condition number exceeds 1e4 are skipped with a
 * reason, never failed.
 */

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "json.hpp"

#include "wrightkit/calculus.hpp"
#include "wrightkit/decompose.hpp"
#include "wrightkit/errors.hpp"
#include "wrightkit/io.hpp"
#include "wrightkit/poly_reduce.hpp"
#include "wrightkit/reference.hpp"
#include "wrightkit/series.hpp"

namespace wrightkit {

enum class CaseStatus { pass, fail, skip };

inline std::string_view status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::skip: return "skip";
    }
    return "fail";
}

using CaseValue = std::variant<std::monostate, double, std::string>;

struct CaseRecord {
    std::string check;
    std::string route_a;
    std::string route_b;
    Rational a;
    Rational b;
    std::optional<double> z;
    CaseValue value_a;
    CaseValue value_b;
    double abs_err = 0.0;
    double rel_err = 0.0;
    CaseStatus status = CaseStatus::pass;
    std::string reason;
};

struct ToleranceEntry {
    std::string check;
    bool exact = false;
    double rel = 0.0;
    double abs = 0.0;
};

struct VerifySummary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct VerifyReport {
    std::string suite;
    std::vector<ToleranceEntry> tolerances;
    std::vector<CaseRecord> cases;

    VerifySummary summary() const {
        VerifySummary s;
        for (const auto& c : cases) {
            if (c.status == CaseStatus::pass) ++s.passed;
            if (c.status == CaseStatus::fail) ++s.failed;
            if (c.status == CaseStatus::skip) ++s.skipped;
        }
        return s;
    }

    void append(VerifyReport other) {
        for (auto& t : other.tolerances) tolerances.push_back(std::move(t));
        for (auto& c : other.cases) cases.push_back(std::move(c));
    }
};

inline constexpr double kAbsTol = 1e-12;
inline constexpr double kConditionGuard = 1e4;
inline constexpr double kOracleGridTol = 1e-9;
inline constexpr double kReferenceTol = 1e-8;
inline constexpr double kDerivativeTol = 1e-6;
inline constexpr double kIntegralTol = 1e-7;
inline constexpr double kStep = 1e-5;
/// Second differences lose ~eps/h^2 to rounding; 1e-4 keeps that near 1e-8.
inline constexpr double kSecondDifferenceStep = 1e-4;

struct OracleGrid {
    std::vector<Rational> a_values;
    std::vector<Rational> b_values;
    std::vector<double> z_values;
};

inline OracleGrid default_oracle_grid() {
    return {
        {rat(1, 4), rat(-1, 4), rat(1, 3), rat(-1, 3), rat(1, 2), rat(-1, 2), rat(2, 3), rat(-2, 3), rat(3, 4),
         rat(-3, 4), 1, 2},
        {rat(-1, 2), rat(1, 4), rat(1, 2), rat(3, 4), 1, rat(3, 2), 2, rat(5, 2), rat(7, 2)},
        {-3.0, -1.0, -0.25, 0.0, 0.25, 1.0, 3.0},
    };
}

namespace vdetail {

inline CaseRecord record(std::string check, std::string route_a, std::string route_b, const Rational& a,
                         const Rational& b, std::optional<double> z) {
    CaseRecord c;
    c.check = std::move(check);
    c.route_a = std::move(route_a);
    c.route_b = std::move(route_b);
    c.a = a;
    c.b = b;
    c.z = z;
    return c;
}

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline CaseRecord compare(std::string check, std::string route_a, std::string route_b, const Rational& a,
                          const Rational& b, std::optional<double> z, double va, double vb, double rel_tol) {
    CaseRecord c = record(std::move(check), std::move(route_a), std::move(route_b), a, b, z);
    c.value_a = va;
    c.value_b = vb;
    c.abs_err = std::fabs(va - vb);
    c.rel_err = vb != 0.0 ? c.abs_err / std::fabs(vb) : (c.abs_err == 0.0 ? 0.0 : INFINITY);
    const bool ok = std::isfinite(va) && std::isfinite(vb) && (c.rel_err <= rel_tol || c.abs_err <= kAbsTol);
    c.status = ok ? CaseStatus::pass : CaseStatus::fail;
    return c;
}

inline CaseRecord exact_compare(std::string check, std::string route_a, std::string route_b, const Rational& a,
                                const Rational& b, const QPolynomial& pa, const QPolynomial& pb) {
    CaseRecord c = record(std::move(check), std::move(route_a), std::move(route_b), a, b, std::nullopt);
    c.value_a = pa.str();
    c.value_b = pb.str();
    c.status = pa == pb ? CaseStatus::pass : CaseStatus::fail;
    if (c.status == CaseStatus::fail) {
        c.abs_err = c.rel_err = INFINITY;
        c.reason = "polynomials differ";
    }
    return c;
}

inline CaseRecord errored(std::string check, std::string route_a, std::string route_b, const Rational& a,
                          const Rational& b, std::optional<double> z, const std::exception& e) {
    CaseRecord c = record(std::move(check), std::move(route_a), std::move(route_b), a, b, z);
    c.status = CaseStatus::fail;
    c.abs_err = c.rel_err = INFINITY;
    c.reason = std::string("error: ") + e.what();
    return c;
}

/// Ascending numerator coefficients over a common denominator.
struct TableEntry {
    std::vector<Rational::int_type> numerator;
    Rational::int_type denominator;
};

inline QPolynomial from_entry(const TableEntry& e) {
    QPolynomial p;
    for (std::size_t i = 0; i < e.numerator.size(); ++i)
        p.add_term(static_cast<int>(i), Rational(e.numerator[i], e.denominator));
    return p;
}

}  // namespace vdetail

/// The published table of W(-n, m+1 | z): row m lists n = m+1 down to 1.
inline std::vector<std::vector<vdetail::TableEntry>> bell_table() {
    return {
        {{{1}, 1}, {{1, 1}, 1}},
        {{{1}, 2}, {{1, 2}, 2}, {{1, 2, 1}, 2}},
        {{{1}, 6}, {{1, 6}, 6}, {{1, 6}, 6}, {{1, 3, 3, 1}, 6}},
        {{{1}, 24}, {{1, 24}, 24}, {{1, 24}, 24}, {{1, 12, 12}, 24}, {{1, 4, 6, 4, 1}, 24}},
        {{{1}, 120}, {{1, 120}, 120}, {{1, 120}, 120}, {{1, 60}, 120}, {{1, 20, 60}, 120}, {{1, 5, 10, 10, 5, 1}, 120}},
    };
}

inline VerifyReport run_bell_table() {
    VerifyReport r{"bell-table", {{"bell-table", true, 0.0, 0.0}}, {}};
    const auto table = bell_table();
    for (std::size_t row = 0; row < table.size(); ++row) {
        const auto m = static_cast<Rational::int_type>(row + 1);
        const auto& entries = table[row];
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto n = static_cast<Rational::int_type>(entries.size() - i);
            const Rational a(-n), b(m + 1);
            r.cases.push_back(vdetail::exact_compare("bell-table", "bell_reduce", "table", a, b, bell_reduce(a, b),
                                                     vdetail::from_entry(entries[i])));
        }
    }
    return r;
}

inline VerifyReport run_poly_dual() {
    VerifyReport r{"poly-dual", {{"poly-dual", true, 0.0, 0.0}}, {}};
    const std::vector<Rational> as{rat(-1, 4), rat(-1, 3), rat(-1, 2), rat(-2, 3), rat(-3, 4)};
    const std::vector<Rational> bs{1, rat(5, 4), rat(3, 2), 2, rat(5, 2), 3, rat(7, 2), 4};
    for (const auto& a : as)
        for (const auto& b : bs)
            r.cases.push_back(vdetail::exact_compare("poly-dual", "poly_part", "poly_part_closed", a, b,
                                                     poly_part(a, b), poly_part_closed(a, b)));
    QPolynomial expected;
    expected.add_term(1, rat(1, 2));
    expected.add_term(3, rat(1, 6));
    expected.add_term(5, rat(1, 120));
    r.cases.push_back(vdetail::exact_compare("poly-dual", "poly_part", "published", rat(-1, 2), rat(7, 2),
                                             poly_part(rat(-1, 2), rat(7, 2)), expected));
    return r;
}

inline VerifyReport run_oracle_grid(double tol = kOracleGridTol, const OracleGrid& grid = default_oracle_grid(),
                                    SecondTypeScale scale = SecondTypeScale::reflected) {
    VerifyReport r{"oracle-grid", {{"oracle-grid", false, tol, kAbsTol}}, {}};
    for (const auto& a : grid.a_values) {
        for (const auto& b : grid.b_values) {
            const WrightSpec spec = classify(a, b);
            if (spec.kind == WrightKind::Unsupported) {
                for (double z : grid.z_values) {
                    CaseRecord c = vdetail::record("oracle-grid", "decomposition", "series", a, b, z);
                    c.status = CaseStatus::skip;
                    c.reason = "domain";
                    r.cases.push_back(std::move(c));
                }
                continue;
            }
            const Decomposition d = decompose(a, b, scale);
            for (double z : grid.z_values) {
                try {
                    const SeriesResult s = wright_series_detailed(a, b, z);
                    if (s.condition > kConditionGuard) {
                        CaseRecord c = vdetail::record("oracle-grid", "decomposition", "series", a, b, z);
                        c.status = CaseStatus::skip;
                        c.reason = "condition-guard: " + vdetail::sci(s.condition);
                        r.cases.push_back(std::move(c));
                        continue;
                    }
                    r.cases.push_back(vdetail::compare("oracle-grid", "decomposition", "series", a, b, z,
                                                       eval_decomposition(d, z), s.value, tol));
                } catch (const Error& e) {
                    r.cases.push_back(vdetail::errored("oracle-grid", "decomposition", "series", a, b, z, e));
                }
            }
        }
    }
    return r;
}

inline VerifyReport run_reference_forms(double tol = kReferenceTol) {
    VerifyReport r{"reference-forms",
                   {{"reference", false, tol, kAbsTol}, {"reference-oracle", false, tol, kAbsTol}},
                   {}};
    for (const ReferenceCase& rc : reference_cases()) {
        const std::string id(rc.id);
        for (double z : rc.sample_points()) {
            const double w = rc.arg_sign * z;
            try {
                const double ref = reference_eval(rc.id, z);
                r.cases.push_back(
                    vdetail::compare("reference:" + id, "wright", "reference", rc.a, rc.b, w, wright(rc.a, rc.b, w), ref, tol));
                const SeriesResult s = wright_series_detailed(rc.a, rc.b, w);
                if (s.condition > kConditionGuard) {
                    CaseRecord c = vdetail::record("reference-oracle:" + id, "series", "reference", rc.a, rc.b, w);
                    c.status = CaseStatus::skip;
                    c.reason = "condition-guard: " + vdetail::sci(s.condition);
                    r.cases.push_back(std::move(c));
                } else {
                    r.cases.push_back(vdetail::compare("reference-oracle:" + id, "series", "reference", rc.a, rc.b, w,
                                                       s.value, ref, tol));
                }
            } catch (const Error& e) {
                r.cases.push_back(vdetail::errored("reference:" + id, "wright", "reference", rc.a, rc.b, w, e));
            }
        }
    }
    return r;
}

/// Centered first difference with step h.
inline double central_difference(const std::function<double(double)>& f, double z, double h = kStep) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// Centered second difference with step h.
inline double second_difference(const std::function<double(double)>& f, double z, double h = kSecondDifferenceStep) {
    return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
}

/// Adaptive Gauss-Kronrod (21 point) integral over [lo, hi].
inline double integrate(const std::function<double(double)>& f, double lo, double hi) {
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, lo, hi, 15, 1e-13, &err);
}

inline VerifyReport run_calculus() {
    VerifyReport r{"calculus",
                   {{"calculus:derivative", false, kDerivativeTol, kAbsTol},
                    {"calculus:integral", false, kIntegralTol, kAbsTol},
                    {"calculus:gaussian", false, kDerivativeTol, kAbsTol}},
                   {}};
    const std::vector<Rational> as{rat(-1, 2), rat(-1, 3), rat(1, 2)};
    const std::vector<Rational> bs{rat(1, 2), 1, 2};
    const std::vector<double> zs{0.5, 1.0, 2.0};
    for (const auto& a : as) {
        for (const auto& b : bs) {
            const WrightSpec shifted = d_dz(classify(a, b));
            auto f = [&](double x) { return wright(a, b, x); };
            auto g = [&](double x) { return wright(shifted.a, shifted.b, x); };
            for (double z : zs) {
                try {
                    r.cases.push_back(vdetail::compare("calculus:derivative", "central-difference", "wright(a,a+b)", a,
                                                       b, z, central_difference(f, z), g(z), kDerivativeTol));
                    r.cases.push_back(vdetail::compare("calculus:integral", "wright-rgamma", "quadrature", a, b, z,
                                                       f(z) - rgamma(b), integrate(g, 0.0, z), kIntegralTol));
                } catch (const Error& e) {
                    r.cases.push_back(vdetail::errored("calculus", "wright", "closure", a, b, z, e));
                }
            }
        }
    }
    auto gaussian = [](double x) { return std::exp(-x * x / 4.0) / kSqrtPi; };
    for (int n = 1; n <= 2; ++n) {
        const Rational a = rat(-1, 2), b = rat(1 - n, 2);
        for (double z : {-1.0, 0.3, 2.0}) {
            const double fd = n == 1 ? central_difference(gaussian, z) : second_difference(gaussian, z);
            r.cases.push_back(vdetail::compare("calculus:gaussian", "wright", "finite-difference", a, b, z,
                                               wright(a, b, z), fd, kDerivativeTol));
        }
    }
    return r;
}

inline const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{"oracle-grid", "bell-table", "poly-dual",
                                                     "reference-forms", "calculus", "all"};
    return names;
}

/// Runs a named suite. tol, when given, replaces the route-comparison tolerance of
/// oracle-grid and reference-forms; exact suites and calculus keep their own.
inline VerifyReport run_suite(std::string_view name, std::optional<double> tol = std::nullopt) {
    if (tol && !(*tol > 0.0)) throw UsageError("tolerance must be positive");
    if (name == "bell-table") return run_bell_table();
    if (name == "poly-dual") return run_poly_dual();
    if (name == "oracle-grid") return run_oracle_grid(tol.value_or(kOracleGridTol));
    if (name == "reference-forms") return run_reference_forms(tol.value_or(kReferenceTol));
    if (name == "calculus") return run_calculus();
    if (name == "all") {
        VerifyReport r{"all", {}, {}};
        r.append(run_bell_table());
        r.append(run_poly_dual());
        r.append(run_oracle_grid(tol.value_or(kOracleGridTol)));
        r.append(run_reference_forms(tol.value_or(kReferenceTol)));
        r.append(run_calculus());
        return r;
    }
    throw UsageError("unknown suite '" + std::string(name) + "'");
}

inline ordered_json to_json(const VerifyReport& r) {
    auto value = [](const CaseValue& v) -> ordered_json {
        if (const double* d = std::get_if<double>(&v)) return *d;
        if (const std::string* s = std::get_if<std::string>(&v)) return *s;
        return nullptr;
    };
    ordered_json tolerances = ordered_json::array();
    for (const auto& t : r.tolerances) {
        if (t.exact)
            tolerances.push_back({{"check", t.check}, {"exact", true}});
        else
            tolerances.push_back({{"check", t.check}, {"exact", false}, {"rel", t.rel}, {"abs", t.abs}});
    }
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases) {
        ordered_json jc = {{"check", c.check},     {"route_a", c.route_a},
                           {"route_b", c.route_b}, {"a", c.a.str()},
                           {"b", c.b.str()},       {"z", c.z ? ordered_json(*c.z) : ordered_json(nullptr)},
                           {"value_a", value(c.value_a)}, {"value_b", value(c.value_b)},
                           {"abs_err", c.abs_err},  {"rel_err", c.rel_err},
                           {"status", std::string(status_name(c.status))}};
        if (!c.reason.empty()) jc["reason"] = c.reason;
        cases.push_back(std::move(jc));
    }
    const VerifySummary s = r.summary();
    return {{"suite", r.suite},
            {"tolerances", tolerances},
            {"cases", cases},
            {"summary", {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}}};
}

}  // namespace wrightkit
