#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

#include "fdo/fdo_single.hpp"
#include "fdo/instances.hpp"
#include "fdo/verify.hpp"
#include "test_support.hpp"

namespace fdo {
namespace {

using testing::cycle;

const Distance kInf = Distance::infinity();

TEST(BruteDiam, CycleExamples) {
    const Graph g = cycle(4);
    EXPECT_EQ(brute_diam(g, FailureSet(g, {})), Distance(2));
    EXPECT_EQ(brute_diam(g, FailureSet(g, {{0, 1}})), Distance(3));
    EXPECT_EQ(brute_diam(g, FailureSet(g, {{0, 2}})), Distance(2));
    EXPECT_EQ(brute_diam(g, FailureSet(g, {{0, 1}, {2, 3}})), kInf);
}

TEST(BruteReplacement, Examples) {
    const Graph g = cycle(4);
    EXPECT_EQ(brute_replacement(g, 0, 1, FailureSet(g, {{0, 1}})), Distance(3));
    EXPECT_EQ(brute_replacement(g, 0, 2, FailureSet(g, {{0, 1}})), Distance(2));
    EXPECT_EQ(brute_replacement(g, 0, 1, FailureSet(g, {{0, 1}, {2, 3}})), kInf);
    const Graph d = cycle(3, true);
    EXPECT_EQ(brute_replacement(d, 1, 0, FailureSet(d, {})), Distance(2));
}

TEST(BruteDiam, MatchesFloyd) {
    RandomParams rp;
    rp.n = 10;
    rp.seed = 9;
    rp.p = 0.3;
    const Graph g = gen_random(RandomKind::ErWeighted, rp);
    EnumeratorParams ep;
    ep.max_size = 2;
    for (const auto& failed : enumerate_failures(g, ep))
        ASSERT_EQ(brute_diam(g, failed).value(), testing::floyd_diameter(g, failed));
}

TEST(WithinStretch, Rules) {
    EXPECT_TRUE(within_stretch(Distance(3), Distance(3), 1.0));
    EXPECT_FALSE(within_stretch(Distance(2), Distance(3), 2.0));
    EXPECT_TRUE(within_stretch(Distance(6), Distance(3), 2.0));
    EXPECT_FALSE(within_stretch(Distance(7), Distance(3), 2.0));
    EXPECT_TRUE(within_stretch(Distance(0.1 + 0.2), Distance(0.3), 1.0));
    EXPECT_TRUE(within_stretch(kInf, kInf, 1.0));
    EXPECT_FALSE(within_stretch(kInf, Distance(3), 100.0));
    EXPECT_FALSE(within_stretch(Distance(3), kInf, 100.0));
}

TEST(Enumerator, ExhaustiveOrder) {
    const Graph g = cycle(4);
    EnumeratorParams ep;
    ep.min_size = 0;
    ep.max_size = 2;
    const auto sets = enumerate_failures(g, ep);
    EXPECT_TRUE(enumeration_is_exhaustive(g, ep));
    ASSERT_EQ(sets.size(), 1u + 4u + 6u);
    EXPECT_TRUE(sets[0].empty());
    EXPECT_EQ(sets[1], (std::vector<EdgeId>{0}));
    EXPECT_EQ(sets[5], (std::vector<EdgeId>{0, 1}));
    EXPECT_EQ(sets.back(), (std::vector<EdgeId>{2, 3}));
}

TEST(Enumerator, SampledIsSeededAndValid) {
    const Graph g = testing::complete(12);
    EnumeratorParams ep;
    ep.min_size = 1;
    ep.max_size = 3;
    ep.exhaustive_limit = 10;
    ep.samples = 50;
    EXPECT_FALSE(enumeration_is_exhaustive(g, ep));
    const auto a = enumerate_failures(g, ep);
    EXPECT_EQ(a, enumerate_failures(g, ep));
    ASSERT_EQ(a.size(), 50u);
    for (const auto& s : a) {
        ASSERT_GE(s.size(), 1u);
        ASSERT_LE(s.size(), 3u);
        ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
        ASSERT_EQ(std::set<EdgeId>(s.begin(), s.end()).size(), s.size());
        for (EdgeId e : s) ASSERT_LT(e, g.m());
    }
    ep.seed = 2;
    EXPECT_NE(a, enumerate_failures(g, ep));
}

TEST(Audit, CleanOraclesHaveNoViolations) {
    const Graph g = cycle(4);
    EnumeratorParams ep;
    const auto sets = enumerate_failures(g, ep);
    const ExactFDO exact = ExactFDO::build(g);
    const AuditReport a = audit(exact, sets, 1.0);
    EXPECT_EQ(a.violations, 0u);
    EXPECT_EQ(a.records.size(), 4u);
    const EccFDO ecc = EccFDO::build(g);
    const AuditReport b = audit(ecc, sets, 2.0);
    EXPECT_EQ(b.violations, 0u);
    EXPECT_EQ(b.max_ratio, 2.0);
}

TEST(Audit, DetectsCorruptedEntry) {
    const Graph g = cycle(4);
    std::string text = ExactFDO::build(g).to_string();
    const auto pos = text.find("\n0 3\n");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 5, "\n0 2\n");
    const auto bad = load_oracle(text, g);
    EnumeratorParams ep;
    const AuditReport r = audit(*bad, enumerate_failures(g, ep), 1.0);
    EXPECT_EQ(r.violations, 1u);
    EXPECT_TRUE(r.records[0].violation);
    EXPECT_EQ(r.records[0].failures, "0-1");
}

TEST(Audit, JsonLines) {
    const Graph g = cycle(4);
    EnumeratorParams ep;
    const ExactFDO exact = ExactFDO::build(g);
    AuditReport r = audit(exact, enumerate_failures(g, ep), 1.0);
    r.exhaustive = true;
    std::ostringstream out;
    r.write_jsonl(out, true);
    std::istringstream in(out.str());
    std::vector<nlohmann::json> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
    ASSERT_EQ(lines.size(), 4u + 2u);
    EXPECT_EQ(lines[0]["record"], "query");
    EXPECT_EQ(lines[0]["failures"], "0-1");
    EXPECT_EQ(lines[0]["answer"], "3");
    EXPECT_EQ(lines[0]["truth"], "3");
    EXPECT_EQ(lines[0]["violation"], false);
    EXPECT_EQ(lines[4]["record"], "summary");
    EXPECT_EQ(lines[4]["kind"], "exact");
    EXPECT_EQ(lines[4]["queries"], 4);
    EXPECT_EQ(lines[4]["violations"], 0);
    EXPECT_EQ(lines[4]["exhaustive"], true);
    EXPECT_EQ(lines[5]["record"], "timing");

    std::ostringstream plain;
    r.write_jsonl(plain);
    EXPECT_EQ(plain.str().find("timing"), std::string::npos);
}

TEST(PivotCoverage, Examples) {
    const Graph g = cycle(6);
    EXPECT_FALSE(pivot_coverage_gaps(g, {}, 1).empty());
    const std::vector<VertexId> all = {0, 1, 2, 3, 4, 5};
    EXPECT_TRUE(pivot_coverage_gaps(g, all, 1).empty());
    const std::vector<VertexId> evens = {0, 2, 4};
    EXPECT_TRUE(pivot_coverage_gaps(g, evens, 1).empty());
    const std::vector<VertexId> one = {0};
    EXPECT_FALSE(pivot_coverage_gaps(g, one, 1).empty());
    EXPECT_TRUE(pivot_coverage_gaps(g, one, 5).empty());
}

}  // namespace
}  // namespace fdo
