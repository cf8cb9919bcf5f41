#include <gtest/gtest.h>

#include <set>

#include "orbitcalc/harness.hpp"
#include "orbitcalc/serialize.hpp"

namespace {

using namespace orbitcalc;

TEST(Registry, NamesAreUnique) {
    std::set<std::string> names;
    for (const auto& p : properties()) EXPECT_TRUE(names.insert(p.name).second) << p.name;
    for (const char* required : {"prop_ws", "dim_identity", "worder", "achar", "dd_special", "collapse_oracle",
                                 "springer_roundtrip", "closure_oracle", "chain", "npsi_oracle"}) {
        EXPECT_EQ(names.count(required), 1u) << required;
    }
}

TEST(Registry, UnknownNameAndBound) {
    EXPECT_THROW(verify("no_such_property"), InputError);
    EXPECT_THROW(verify("collapse_oracle", 1000), InputError);
}

TEST(Verify, EveryPropertyPassesAtSmallBound) {
    for (const auto& p : properties()) {
        const VerificationReport r = verify(p.name, std::min(p.default_bound, 8));
        EXPECT_TRUE(r.passed()) << p.name << ": " << (r.failures.empty() ? "" : r.failures.front().observed);
        EXPECT_GT(r.cases_checked, 0) << p.name;
    }
}

TEST(Verify, ReportsAreDeterministic) {
    const VerificationReport a = verify("prop_ws", 10), b = verify("prop_ws", 10);
    EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
}

TEST(Verify, JsonKeyOrder) {
    const Json j = to_json(verify("transpose_involution", 4), false);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"property", "bound", "cases_checked", "failure_count", "failures",
                                              "notes", "passed"}));
}

TEST(Recorder, CountsFailures) {
    harness::Recorder rec("demo", 3);
    rec.check(true, [] { return std::string("a"); }, "rel", [] { return std::string("x"); });
    rec.check(false, [] { return std::string("b"); }, "rel", [] { return std::string("y"); });
    rec.guarded([] { return std::string("c"); }, "rel", [] { throw InvariantViolation("boom"); });
    const VerificationReport r = rec.finish();
    EXPECT_EQ(r.cases_checked, 3);
    EXPECT_EQ(r.failure_count, 2);
    ASSERT_EQ(r.failures.size(), 2u);
    EXPECT_EQ(r.failures[0].inputs, "b");
    EXPECT_NE(r.failures[1].observed.find("boom"), std::string::npos);
    EXPECT_FALSE(r.passed());
}

}  // namespace
