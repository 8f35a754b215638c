#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "wrightkit/verify.hpp"

using namespace wrightkit;

TEST(Verify, BellTableIsExact) {
    const VerifyReport r = run_suite("bell-table");
    EXPECT_EQ(r.cases.size(), 20u);
    EXPECT_EQ(r.summary().failed, 0);
    EXPECT_EQ(r.summary().passed, 20);
}

TEST(Verify, BellTableMapping) {
    // row m = 2 holds W(-3, 3), W(-2, 3), W(-1, 3)
    const auto table = bell_table();
    ASSERT_EQ(table.size(), 5u);
    EXPECT_EQ(vdetail::from_entry(table[1][1]).str(), "1/2 + z");
    EXPECT_EQ(vdetail::from_entry(table[1][2]), bell_reduce(Rational(-1), Rational(3)));
}

TEST(Verify, PolyDualIsExact) {
    const VerifyReport r = run_suite("poly-dual");
    EXPECT_EQ(r.cases.size(), 41u);
    EXPECT_EQ(r.summary().failed, 0);
}

TEST(Verify, OracleGridPassesWithFewSkips) {
    const VerifyReport r = run_suite("oracle-grid", 1e-9);
    const VerifySummary s = r.summary();
    EXPECT_EQ(s.failed, 0);
    EXPECT_EQ(r.cases.size(), 12u * 9u * 7u);
    EXPECT_LE(s.skipped * 10, static_cast<int>(r.cases.size()));
    for (const CaseRecord& c : r.cases)
        if (c.status == CaseStatus::skip) {
            EXPECT_EQ(c.reason.rfind("condition-guard", 0), 0u);
        }
}

TEST(Verify, CalculusPasses) { EXPECT_EQ(run_suite("calculus").summary().failed, 0); }

TEST(Verify, ReferenceFormsFailOnlyOnQuarterBesselForm) {
    const VerifyReport r = run_suite("reference-forms");
    for (const CaseRecord& c : r.cases)
        if (c.status == CaseStatus::fail) {
            EXPECT_NE(c.check.find("K14"), std::string::npos) << c.check;
        }
    EXPECT_GT(r.summary().failed, 0);
}

TEST(Verify, UnknownSuiteAndBadTolerance) {
    EXPECT_THROW(run_suite("bogus"), UsageError);
    EXPECT_THROW(run_suite("oracle-grid", -1.0), UsageError);
}

TEST(Verify, StatusRule) {
    const CaseRecord near_zero = vdetail::compare("x", "a", "b", 0, 1, 0.0, 1e-13, 0.0, 1e-9);
    EXPECT_EQ(near_zero.status, CaseStatus::pass);
    const CaseRecord rel = vdetail::compare("x", "a", "b", 0, 1, 0.0, 1.0 + 5e-10, 1.0, 1e-9);
    EXPECT_EQ(rel.status, CaseStatus::pass);
    const CaseRecord bad = vdetail::compare("x", "a", "b", 0, 1, 0.0, 1.0 + 2e-9, 1.0, 1e-9);
    EXPECT_EQ(bad.status, CaseStatus::fail);
    const CaseRecord nan = vdetail::compare("x", "a", "b", 0, 1, 0.0, NAN, 1.0, 1e-9);
    EXPECT_EQ(nan.status, CaseStatus::fail);
}

TEST(Verify, AllIsConcatenationInFixedOrder) {
    const VerifyReport all = run_suite("all");
    std::size_t expected = 0;
    for (const char* s : {"bell-table", "poly-dual", "oracle-grid", "reference-forms", "calculus"})
        expected += run_suite(s).cases.size();
    EXPECT_EQ(all.cases.size(), expected);
    EXPECT_EQ(all.cases.front().check, "bell-table");
    EXPECT_EQ(all.cases.back().check, "calculus:gaussian");
}

TEST(Verify, JsonIsDeterministic) {
    const std::string a = to_json(run_suite("all")).dump(2);
    const std::string b = to_json(run_suite("all")).dump(2);
    EXPECT_EQ(a, b);
    const ordered_json j = ordered_json::parse(a);
    std::string keys;
    for (const auto& [k, v] : j.items()) keys += k + ",";
    EXPECT_EQ(keys, "suite,tolerances,cases,summary,");
}

TEST(Verify, ToleranceOverrideAppliesToRouteComparisons) {
    const VerifyReport r = run_suite("oracle-grid", 1e-6);
    ASSERT_EQ(r.tolerances.size(), 1u);
    EXPECT_EQ(r.tolerances[0].rel, 1e-6);
    const VerifyReport c = run_suite("calculus", 1e-3);
    EXPECT_EQ(c.tolerances[0].rel, kDerivativeTol);
}
