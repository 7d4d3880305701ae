#include "schreier/verify.hpp"

#include <gtest/gtest.h>

#include "schreier/errors.hpp"

namespace schreier::verify {
namespace {

TEST(VerifyTest, NamesRoundTrip) {
  EXPECT_EQ(all_theorems().size(), 13u);
  for (Theorem t : all_theorems()) EXPECT_EQ(parse_theorem(theorem_name(t)), t);
  EXPECT_FALSE(parse_theorem("thm9").has_value());
}

TEST(VerifyTest, EverySuitePassesOnSmallRanges) {
  for (Theorem t : all_theorems()) {
    const auto [k, n] = default_ranges(t);
    Limits lim;
    lim.k_max = static_cast<int>(std::min<std::int64_t>(k.hi, k.lo + 2));
    lim.n_max = static_cast<int>(std::min<std::int64_t>(n.hi, n.lo + 8));
    const Report r = run(t, lim);
    EXPECT_TRUE(r.passed()) << r.suite;
    EXPECT_GT(r.checks, 0u) << r.suite;
    for (const auto& f : r.failures) {
      ADD_FAILURE() << f.check << " " << f.inputs << " expected " << f.expected
                    << " got " << f.actual;
    }
  }
}

TEST(VerifyTest, DefaultRangesOfFastSuites) {
  for (Theorem t : {Theorem::Thm1, Theorem::Thm2, Theorem::Thm3, Theorem::Cor1,
                    Theorem::Cor2, Theorem::Lemma23, Theorem::Hockey}) {
    const Report r = run(t);
    EXPECT_TRUE(r.passed()) << r.suite;
  }
  const Report thm1 = run(Theorem::Thm1);
  EXPECT_EQ(thm1.k_range.lo, 1);
  EXPECT_EQ(thm1.k_range.hi, 6);
  EXPECT_EQ(thm1.n_range.hi, 60);
}

TEST(VerifyTest, LimitsOverrideUpperBounds) {
  const Report r = run(Theorem::Cor1, {3, 7});
  EXPECT_EQ(r.k_range.hi, 3);
  EXPECT_EQ(r.n_range.hi, 7);
  EXPECT_THROW(run(Theorem::Thm1, {0, std::nullopt}), std::invalid_argument);
}

TEST(VerifyTest, OracleSuitesRespectCap) {
  EXPECT_THROW(run(Theorem::Partition, {std::nullopt, 24}), CapExceeded);
  EXPECT_THROW(run(Theorem::Phi, {std::nullopt, 30}), CapExceeded);
  EXPECT_THROW(run(Theorem::Oracle, {std::nullopt, 40}), CapExceeded);
  EXPECT_NO_THROW(run(Theorem::Phi, {2, 5}));
}

TEST(VerifyTest, JsonSchema) {
  const Report r = run(Theorem::Hockey, {5, 5});
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "suite", "k_range",
                                            "n_range", "checks", "passed",
                                            "failures"}));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["suite"], "hockey");
  EXPECT_EQ(j["k_range"], nlohmann::ordered_json::array({0, 5}));
  EXPECT_EQ(j["checks"], r.checks);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_TRUE(to_json(r, true).contains("wall_time_ms"));
}

TEST(VerifyTest, JsonIsDeterministic) {
  const auto a = to_json(run(Theorem::Lemma23, {10, std::nullopt})).dump();
  const auto b = to_json(run(Theorem::Lemma23, {10, std::nullopt})).dump();
  EXPECT_EQ(a, b);
}

TEST(VerifyTest, FailuresAreSerialised) {
  Report r;
  r.suite = "thm1";
  r.checks = 1;
  r.failures.push_back({"thm1.extraction", "k=2 n=3", "3", "4"});
  EXPECT_FALSE(r.passed());
  const auto j = to_json(r);
  EXPECT_EQ(j["passed"], false);
  ASSERT_EQ(j["failures"].size(), 1u);
  EXPECT_EQ(j["failures"][0]["check"], "thm1.extraction");
  EXPECT_EQ(j["failures"][0]["actual"], "4");
  Report empty;
  EXPECT_FALSE(empty.passed());
}

}  // namespace
}  // namespace schreier::verify
