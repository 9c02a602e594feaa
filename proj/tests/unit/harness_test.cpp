#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "coeffcat/harness/report.hpp"

using namespace coeffcat;

namespace {

std::vector<const CheckRecord*> failures(const Report& r) {
  std::vector<const CheckRecord*> out;
  for (const auto& c : r.checks)
    if (c.result.failed()) out.push_back(&c);
  return out;
}

Json minimal(Json extra = Json::object()) {
  Json j{{"name", "t"}, {"group", "C2"}, {"category", {{"category", "TrivialRing"}, {"ring", {{"type", "Zmod"}, {"n", 2}}}}}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

}  // namespace

TEST(Harness, CatalogHasTheBuiltins) {
  std::set<std::string> names;
  for (const auto& e : builtinCatalog()) {
    names.insert(e.name);
    EXPECT_FALSE(e.description.empty());
    EXPECT_NO_THROW(resolveInstance(loadInstance(e.name))) << e.name;
  }
  for (const auto* n : {"c2-trivial", "c4-extension", "q8-center", "s3-coset", "f4-frobenius"}) EXPECT_TRUE(names.count(n)) << n;
}

TEST(Harness, C4ExtensionPassesEverySuite) {
  const auto r = runSuites(loadInstance("c4-extension"));
  EXPECT_EQ(r.exitCode(), 0);
  EXPECT_EQ(r.suites, [] {
    auto s = suiteNames();
    std::sort(s.begin(), s.end());
    return s;
  }());
  EXPECT_TRUE(failures(r).empty()) << r.toText();
  EXPECT_GT(r.count(Verdict::Pass), 100u);
}

TEST(Harness, CorruptedTauFailsOnlyTheCocycleCheck) {
  const auto r = runSuites(loadInstance("mutant-tau"));
  EXPECT_EQ(r.exitCode(), 1);
  const auto f = failures(r);
  ASSERT_EQ(f.size(), 1u) << r.toText();
  EXPECT_EQ(f[0]->result.id, "crossed.cocycle");
  ASSERT_TRUE(f[0]->result.witness);
  for (const auto* k : {"g", "h", "k", "lhs", "rhs"}) EXPECT_TRUE(f[0]->result.witness->contains(k)) << k;
}

TEST(Harness, SwappedActionFailsOnlyComposition) {
  const auto r = runSuites(loadInstance("mutant-action"));
  const auto f = failures(r);
  ASSERT_EQ(f.size(), 1u) << r.toText();
  EXPECT_EQ(f[0]->result.id, "base.action.composition");
  EXPECT_TRUE(f[0]->result.witness);
  // Everything built on the broken action is skipped, not failed.
  for (const auto& c : r.checks)
    if (c.result.id.rfind("star[", 0) == 0) EXPECT_EQ(c.result.verdict, Verdict::Skipped) << c.result.id;
}

TEST(Harness, MutantsAcrossAllSuitesStillFailOnce) {
  for (const auto* name : {"mutant-tau", "mutant-action"}) {
    RunOptions opt;
    opt.suites = suiteNames();
    const auto r = runSuites(loadInstance(name), opt);
    EXPECT_EQ(failures(r).size(), 1u) << name << "\n" << r.toText();
  }
}

TEST(Harness, ReportsAreDeterministicForAFixedSeed) {
  RunOptions opt;
  opt.seed = 99;
  opt.exhaustiveLimit = 200;
  opt.samples = 100;
  const auto a = runSuites(loadInstance("f4-frobenius"), opt);
  opt.jobs = 3;
  const auto b = runSuites(loadInstance("f4-frobenius"), opt);
  EXPECT_EQ(a.toJson(false).dump(), b.toJson(false).dump());
  EXPECT_FALSE(a.toJson(false).contains("timing"));
  EXPECT_TRUE(a.toJson(true).contains("timing"));
  // Some check must actually be sampled for the seed to matter.
  EXPECT_GT(std::count_if(a.checks.begin(), a.checks.end(),
                          [](const auto& c) { return c.result.coverage == Coverage::Sampled; }),
            0);
}

TEST(Harness, SeedChangesSampledCasesOnly) {
  RunOptions opt;
  opt.suites = std::vector<std::string>{"star-axioms"};
  opt.exhaustiveLimit = 200;
  opt.samples = 50;
  opt.seed = 1;
  const auto a = runSuites(loadInstance("c4-extension"), opt);
  opt.seed = 2;
  const auto b = runSuites(loadInstance("c4-extension"), opt);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].result.id, b.checks[i].result.id);
    EXPECT_EQ(a.checks[i].result.verdict, b.checks[i].result.verdict);
  }
}

TEST(Harness, ChecksAreSortedBySuiteThenId) {
  const auto r = runSuites(loadInstance("c2-trivial"));
  for (std::size_t i = 1; i < r.checks.size(); ++i)
    EXPECT_LE(std::tie(r.checks[i - 1].suite, r.checks[i - 1].result.id),
              std::tie(r.checks[i].suite, r.checks[i].result.id));
}

TEST(Harness, EmptySelectionGivesEmptyReport) {
  auto d = parseInstance(minimal({{"suites", Json::array()}}));
  const auto r = runSuites(d);
  EXPECT_TRUE(r.checks.empty());
  EXPECT_EQ(r.exitCode(), 0);
  EXPECT_EQ(r.toJson(false)["summary"]["total"], 0);
}

TEST(Harness, OverridesReachTheReport) {
  RunOptions opt;
  opt.suites = std::vector<std::string>{"controlled"};
  opt.maxRank = 2;
  opt.samples = 17;
  opt.seed = 5;
  const auto r = runSuites(parseInstance(minimal()), opt);
  EXPECT_EQ(r.bounds.maxRank, 2u);
  EXPECT_EQ(r.bounds.samples, 17u);
  EXPECT_EQ(r.seed, 5u);
  EXPECT_TRUE(failures(r).empty()) << r.toText();
}

TEST(Harness, SuiteBoundsOverrideTheDefaults) {
  auto d = parseInstance(minimal({{"suiteBounds", {{"swan", {{"maxRank", 2}}}}}}));
  EXPECT_EQ(d.boundsFor("swan").maxRank, 2u);
  EXPECT_EQ(d.boundsFor("controlled").maxRank, 1u);
}

TEST(Harness, InputErrors) {
  EXPECT_THROW(parseInstance(minimal({{"colour", "blue"}})), InputError);
  EXPECT_THROW(parseInstance(minimal({{"bounds", {{"samples", 0}}}})), InputError);
  EXPECT_THROW(parseInstance(minimal({{"seed", -3}})), InputError);
  EXPECT_THROW(resolveInstance(parseInstance(minimal({{"group", "C7x"}}))), InputError);
  EXPECT_THROW(resolveInstance(parseInstance(minimal({{"normal", Json::array({"zz"})}}))), InputError);
  EXPECT_THROW(loadInstance("no-such-instance-or-file"), InputError);
  RunOptions opt;
  opt.suites = std::vector<std::string>{"prop99"};
  EXPECT_THROW(runSuites(parseInstance(minimal()), opt), InputError);
}

TEST(Harness, QuotientNeedsTrivialActionOfN) {
  // Frobenius does not act trivially, so the quotient step is skipped with a reason.
  Json j = minimal({{"category",
                     {{"category", "TwistedModule"}, {"ring", {{"type", "GF4"}}}, {"alpha", {"id", "frobenius"}}}},
                    {"normal", "whole"},
                    {"suites", {"star-equivalences"}}});
  const auto r = runSuites(parseInstance(j));
  EXPECT_TRUE(failures(r).size() == 1u && failures(r)[0]->result.id.find("trivial-on-N") != std::string::npos)
      << r.toText();
  bool skipped = false;
  for (const auto& c : r.checks) skipped |= c.result.verdict == Verdict::Skipped && c.result.id.rfind("quotient", 0) == 0;
  EXPECT_TRUE(skipped);
}
