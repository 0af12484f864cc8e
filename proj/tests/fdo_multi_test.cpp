#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "fdo/error.hpp"
#include "fdo/fdo_multi.hpp"
#include "fdo/instances.hpp"
#include "fdo/verify.hpp"
#include "test_support.hpp"

namespace fdo {
namespace {

using testing::floyd_diameter;
using testing::path;
using testing::triangle;

const Distance kInf = Distance::infinity();

// Kruskal over all of G - F by (w', id), without the oracle's component logic.
double brute_forest_weight(const MultiFDO& o, std::span<const EdgeId> failed) {
    const Graph& g = o.graph();
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (std::find(failed.begin(), failed.end(), e) == failed.end()) order.push_back(e);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return o.wprime(a) < o.wprime(b); });
    std::vector<VertexId> label(g.n());
    std::iota(label.begin(), label.end(), 0);
    double total = 0;
    for (EdgeId e : order) {
        const VertexId a = label[g.edge(e).u], b = label[g.edge(e).v];
        if (a == b) continue;
        for (VertexId& l : label)
            if (l == b) l = a;
        total += o.wprime(e);
    }
    return total;
}

Graph weighted(std::size_t n, std::uint64_t seed, double p = 0.2) {
    RandomParams rp;
    rp.n = n;
    rp.p = p;
    rp.seed = seed;
    return gen_random(RandomKind::ErWeighted, rp);
}

TEST(MultiFdo, TriangleReweighting) {
    const Graph g = triangle();
    const MultiFDO o = MultiFDO::build(g, 1);
    EXPECT_EQ(o.wprime(*g.find_edge(0, 1)), 0.0);
    EXPECT_EQ(o.wprime(*g.find_edge(0, 2)), 0.0);
    EXPECT_EQ(o.wprime(*g.find_edge(1, 2)), 3.0);
    EXPECT_EQ(o.maxdist(), Distance(1));
    EXPECT_EQ(o.swap_edge(*g.find_edge(0, 1)), g.find_edge(1, 2));
    EXPECT_EQ(o.swap_edge(*g.find_edge(0, 2)), g.find_edge(1, 2));
}

TEST(MultiFdo, PathTree) {
    const Graph g = path(3);
    const MultiFDO o = MultiFDO::build(g, 2);
    for (EdgeId e = 0; e < g.m(); ++e) {
        EXPECT_TRUE(o.in_tree(e));
        EXPECT_EQ(o.wprime(e), 0.0);
    }
    EXPECT_EQ(o.maxdist(), Distance(2));
    EXPECT_EQ(o.query(FailureSet(g, {{0, 1}})), kInf);
    EXPECT_FALSE(o.explain(FailureSet(g, {{0, 1}})).connected);
}

TEST(MultiFdo, IntactTreeGivesTwiceMaxdist) {
    const Graph g = triangle();
    const MultiFDO o = MultiFDO::build(g, 2);
    const MultiExplain x = o.explain(FailureSet(g, {{1, 2}}));
    EXPECT_EQ(x.failed_tree.size(), 0u);
    EXPECT_EQ(x.delta, 0.0);
    EXPECT_EQ(x.answer, Distance(2));
}

TEST(MultiFdo, TriangleSingleFailure) {
    const Graph g = triangle();
    const MultiFDO o = MultiFDO::build(g, 1);
    const FailureSet f(g, {{0, 1}});
    const MultiExplain x = o.explain(f);
    EXPECT_EQ(x.roots, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(x.swap_edges, (std::vector<EdgeId>{*g.find_edge(1, 2)}));
    EXPECT_EQ(x.delta, 2.0);
    EXPECT_EQ(x.answer, Distance(4));
    EXPECT_EQ(o.query(f), Distance(4));
    const EdgeId removed[] = {*g.find_edge(0, 1)};
    EXPECT_EQ(floyd_diameter(g, removed), 2.0);
}

TEST(MultiFdo, TightModeUsesFailedTreeEdgeCount) {
    const Graph g = weighted(12, 3, 0.35);
    const MultiFDO loose = MultiFDO::build(g, 3), tight = MultiFDO::build(g, 3, true);
    const auto tree = loose.tree().tree_edges();
    const EdgeId one[] = {tree[0]};
    const MultiExplain a = loose.explain(FailureSet::of_edges(g, one));
    const MultiExplain b = tight.explain(FailureSet::of_edges(g, one));
    ASSERT_TRUE(a.connected);
    EXPECT_EQ(a.answer.value(), 3 * a.delta + 2 * loose.maxdist().value());
    EXPECT_EQ(b.answer.value(), 1 * b.delta + 2 * tight.maxdist().value());
}

TEST(MultiFdo, Rejections) {
    EXPECT_THROW(MultiFDO::build(testing::cycle(3, true), 2), PreconditionError);
    EXPECT_THROW(MultiFDO::build(Graph::build(3, false, {{0, 1}}), 2), PreconditionError);
    const Graph g = testing::complete(4);
    const MultiFDO o = MultiFDO::build(g, 2);
    EXPECT_THROW(o.query(FailureSet(g, {{0, 1}, {1, 2}, {2, 3}})), QueryError);
    EXPECT_NO_THROW(o.query(FailureSet(g, {{0, 1}, {1, 2}})));
}

TEST(MultiFdo, NonEdgesAreIgnored) {
    const Graph g = path(4);
    const MultiFDO o = MultiFDO::build(g, 2);
    EXPECT_EQ(o.query(FailureSet(g, {{0, 3}})), Distance(6));
}

void check_query(const MultiFDO& o, std::span<const EdgeId> failed) {
    const Graph& g = o.graph();
    const FailureSet f = FailureSet::of_edges(g, failed);
    const MultiExplain x = o.explain(f);
    const double truth = floyd_diameter(g, failed);
    ASSERT_TRUE(within_stretch(x.answer, Distance(truth), static_cast<double>(o.f()) + 2.0));
    ASSERT_EQ(x.answer.is_infinite(), std::isinf(truth));
    ASSERT_EQ(o.query(f), x.answer);
    if (!x.connected) return;
    ASSERT_LE(x.delta, truth + kWeightTolerance);
    ASSERT_NEAR(x.forest_weight, brute_forest_weight(o, failed), 1e-9);
}

TEST(MultiFdo, ExhaustiveSingleFailures) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Graph g = weighted(16, seed);
        for (bool tight : {false, true}) {
            const MultiFDO o = MultiFDO::build(g, 1, tight);
            for (EdgeId e = 0; e < g.m(); ++e) {
                const EdgeId one[] = {e};
                check_query(o, one);
            }
        }
    }
}

TEST(MultiFdo, SampledMultipleFailures) {
    for (std::size_t f : {2u, 3u}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const Graph g = weighted(14, 10 * f + seed, 0.25);
            const MultiFDO o = MultiFDO::build(g, f);
            EnumeratorParams ep;
            ep.min_size = 1;
            ep.max_size = f;
            ep.exhaustive_limit = 0;
            ep.samples = 200;
            ep.seed = seed;
            for (const auto& failed : enumerate_failures(g, ep)) check_query(o, failed);
        }
    }
}

TEST(MultiFdo, SerializationRoundTrip) {
    for (std::size_t f : {1u, 2u}) {
        const Graph g = weighted(12, 40 + f, 0.3);
        const MultiFDO o = MultiFDO::build(g, f, f == 2);
        const std::string text = o.to_string();
        const auto back = load_oracle(text, g);
        EXPECT_EQ(back->to_string(), text);
        EnumeratorParams ep;
        ep.max_size = f;
        for (const auto& failed : enumerate_failures(g, ep)) {
            const FailureSet fs = FailureSet::of_edges(g, failed);
            ASSERT_EQ(back->query(fs), o.query(fs));
        }
    }
}

}  // namespace
}  // namespace fdo
