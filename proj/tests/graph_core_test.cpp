#include <sstream>

#include <gtest/gtest.h>

#include "fdo/error.hpp"
#include "fdo/failure_set.hpp"
#include "fdo/graph_io.hpp"
#include "fdo/instances.hpp"
#include "fdo/shortest_paths.hpp"
#include "test_support.hpp"

namespace fdo {
namespace {

using testing::complete;
using testing::cycle;
using testing::floyd;
using testing::path;
using testing::star;

const Distance kInf = Distance::infinity();

EdgeId id(const Graph& g, VertexId u, VertexId v) { return *g.find_edge(u, v); }

std::vector<double> as_doubles(std::span<const Distance> d) {
    std::vector<double> out;
    for (Distance x : d) out.push_back(x.value());
    return out;
}

TEST(Distance, SaturatesAndOrders) {
    EXPECT_EQ(kInf + Distance(3), kInf);
    EXPECT_LT(Distance(1e18), kInf);
    EXPECT_EQ(max(Distance(2), kInf), kInf);
    EXPECT_EQ(Distance(3).to_string(), "3");
    EXPECT_EQ(Distance(0.1).to_string(), "0.1");
    EXPECT_EQ(kInf.to_string(), "inf");
    EXPECT_EQ(*Distance::parse("inf"), kInf);
    EXPECT_EQ(Distance::parse("0.30000000000000004")->value(), 0.1 + 0.2);
    EXPECT_FALSE(Distance::parse("-1"));
    EXPECT_FALSE(Distance::parse("3x"));
}

TEST(BuildGraph, Cycle) {
    const Graph g = cycle(4);
    EXPECT_EQ(g.n(), 4u);
    EXPECT_EQ(g.m(), 4u);
    EXPECT_TRUE(g.find_edge(1, 0));
    EXPECT_FALSE(g.find_edge(0, 2));
}

TEST(BuildGraph, DirectedCycleDegrees) {
    const Graph g = cycle(3, true);
    EXPECT_EQ(g.m(), 3u);
    for (VertexId v = 0; v < 3; ++v) {
        EXPECT_EQ(g.out(v).size(), 1u);
        EXPECT_EQ(g.in(v).size(), 1u);
    }
    EXPECT_TRUE(g.find_edge(0, 1));
    EXPECT_FALSE(g.find_edge(1, 0));
}

TEST(BuildGraph, RejectsBadInput) {
    EXPECT_THROW(Graph::build(3, false, {{2, 2}}), GraphError);
    EXPECT_THROW(Graph::build(3, false, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_NO_THROW(Graph::build(3, true, {{0, 1}, {1, 0}}));
    EXPECT_THROW(Graph::build(3, false, {{0, 3}}), GraphError);
    EXPECT_THROW(Graph::build(3, false, {{0, 1, -1.0}}, true), GraphError);
    EXPECT_THROW(Graph::build(3, false, {{0, 1, 2.0}}, false), GraphError);
    try {
        Graph::build(3, false, {{2, 2}});
        FAIL();
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    }
}

TEST(Sssp, CycleExamples) {
    const Graph g = cycle(4);
    EXPECT_EQ(as_doubles(sssp(g, 0).dists()), (std::vector<double>{0, 1, 2, 1}));
    const EdgeId e01[] = {id(g, 0, 1)};
    EXPECT_EQ(as_doubles(sssp(g, 0, e01).dists()), (std::vector<double>{0, 3, 2, 1}));
}

TEST(Sssp, DirectedCycleCut) {
    const Graph g = cycle(3, true);
    const EdgeId e01[] = {id(g, 0, 1)};
    EXPECT_EQ(sssp(g, 0, e01).dist(1), kInf);
    EXPECT_FALSE(sssp(g, 0, e01).parent(1));
}

TEST(Sssp, SmallestParentWins) {
    const Graph g = cycle(4);
    // Vertex 2 has parents 1 and 3 at equal distance.
    EXPECT_EQ(sssp(g, 0).parent(2)->vertex, 1u);
}

TEST(InTree, DirectedCycle) {
    const Graph g = cycle(3, true);
    EXPECT_EQ(as_doubles(in_tree(g, 0).dists()), (std::vector<double>{0, 2, 1}));
    const EdgeId e20[] = {id(g, 2, 0)};
    const ShortestPathTree t = in_tree(g, 0, e20);
    EXPECT_EQ(t.dist(1), kInf);
    EXPECT_EQ(t.dist(2), kInf);
}

TEST(InTree, UndirectedEqualsSssp) {
    const Graph g = cycle(4);
    EXPECT_EQ(as_doubles(in_tree(g, 2).dists()), as_doubles(sssp(g, 2).dists()));
}

TEST(InTree, PathRunsTowardRoot) {
    const Graph g = cycle(4, true);
    const auto p = in_tree(g, 0).path(1);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->vertices, (std::vector<VertexId>{1, 2, 3, 0}));
    EXPECT_EQ(p->length, Distance(3));
}

TEST(AllPairs, Examples) {
    const AllPairs k4(complete(4));
    for (VertexId s = 0; s < 4; ++s)
        for (VertexId t = 0; t < 4; ++t) EXPECT_EQ(k4.dist(s, t), Distance(s == t ? 0 : 1));
    EXPECT_EQ(AllPairs(path(4)).dist(0, 3), Distance(3));
    const Graph c4 = cycle(4);
    const AllPairs ap(c4);
    for (VertexId s = 0; s < 4; ++s)
        EXPECT_EQ(as_doubles(ap.tree(s).dists()), as_doubles(sssp(c4, s).dists()));
}

TEST(Diameter, Examples) {
    const Graph c4 = cycle(4);
    EXPECT_EQ(diameter(c4), Distance(2));
    const EdgeId e01[] = {id(c4, 0, 1)};
    EXPECT_EQ(diameter(c4, e01), Distance(3));
    const Graph s4 = star(3);
    const EdgeId leaf[] = {id(s4, 0, 1)};
    EXPECT_EQ(diameter(s4, leaf), kInf);
    EXPECT_EQ(eccentricity(c4, 0, e01), Distance(3));
}

TEST(StrongBridges, Examples) {
    EXPECT_EQ(strong_bridges(cycle(3, true)).size(), 3u);
    EXPECT_TRUE(strong_bridges(cycle(4)).empty());
    EXPECT_EQ(strong_bridges(path(4)).size(), 3u);
}

TEST(ExtractPath, Examples) {
    const Graph c4 = cycle(4);
    auto p = sssp(c4, 0).path(2);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->edges.size(), 2u);
    const EdgeId e01[] = {id(c4, 0, 1)};
    p = sssp(c4, 0, e01).path(1);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->vertices, (std::vector<VertexId>{0, 3, 2, 1}));
    EXPECT_EQ(p->length, Distance(3));
    p = sssp(c4, 0).path(0);
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->edges.empty());
    EXPECT_EQ(p->length, Distance(0));
    EXPECT_FALSE(sssp(path(3), 0, std::vector<EdgeId>{0}).path(2));
}

// Small random graphs of every flavour, seeded.
std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        RandomParams p;
        p.n = 6 + seed;
        p.p = 0.35;
        p.seed = seed;
        out.push_back(gen_random(RandomKind::ErUndirected, p));
        out.push_back(gen_random(RandomKind::ErWeighted, p));
        p.backbone = true;
        p.p = 0.15;
        out.push_back(gen_random(RandomKind::ErDigraph, p));
    }
    return out;
}

TEST(Properties, SsspMatchesFloydUnderEveryFailure) {
    for (const Graph& g : corpus()) {
        for (EdgeId e = 0; e < g.m(); ++e) {
            const EdgeId removed[] = {e};
            const auto ref = floyd(g, removed);
            for (VertexId s = 0; s < g.n(); ++s) {
                const ShortestPathTree t = sssp(g, s, removed);
                const ShortestPathTree in = in_tree(g, s, removed);
                for (VertexId v = 0; v < g.n(); ++v) {
                    ASSERT_EQ(t.dist(v).value(), ref[s][v]);
                    ASSERT_EQ(in.dist(v).value(), ref[v][s]);
                }
            }
        }
    }
}

TEST(Properties, PathLengthsMatchDistances) {
    for (const Graph& g : corpus()) {
        for (VertexId s = 0; s < g.n(); ++s) {
            for (const ShortestPathTree& t : {sssp(g, s), in_tree(g, s)}) {
                for (VertexId v = 0; v < g.n(); ++v) {
                    auto p = t.path(v);
                    ASSERT_TRUE(p);
                    double len = 0;
                    for (std::size_t i = 0; i < p->edges.size(); ++i) {
                        const Edge& e = g.edge(p->edges[i]);
                        const VertexId a = p->vertices[i], b = p->vertices[i + 1];
                        ASSERT_TRUE((e.u == a && e.v == b) || (!g.directed() && e.u == b && e.v == a));
                        len += e.w;
                    }
                    ASSERT_EQ(len, t.dist(v).value());
                }
            }
        }
    }
}

TEST(Properties, DiameterAndBridgesAreConsistent) {
    for (const Graph& g : corpus()) {
        const auto bridges = strong_bridges(g);
        for (EdgeId e = 0; e < g.m(); ++e) {
            const EdgeId removed[] = {e};
            const Distance d = diameter(g, removed);
            Distance via_trees = Distance::zero();
            for (VertexId s = 0; s < g.n(); ++s) via_trees = max(via_trees, sssp(g, s, removed).max_dist());
            EXPECT_EQ(d, via_trees);
            EXPECT_EQ(d.value(), testing::floyd_diameter(g, removed));
            EXPECT_EQ(d.is_infinite(), std::binary_search(bridges.begin(), bridges.end(), e));
        }
    }
}

TEST(GraphIo, RoundTrip) {
    const Graph g = Graph::build(3, true, {{0, 1, 2.5}, {1, 2, 1}, {2, 0, 4}}, true);
    const std::string text = graph_to_string(g);
    std::istringstream in(text);
    const Graph back = read_graph(in);
    EXPECT_EQ(back.fingerprint(), g.fingerprint());
    EXPECT_EQ(graph_to_string(back), text);
}

TEST(GraphIo, ParsesCommentsAndRejectsGarbage) {
    std::istringstream ok("# c4\n4 4 U UW\n0 1\n\n1 2\n# mid\n2 3\n3 0\n");
    EXPECT_EQ(read_graph(ok).m(), 4u);
    std::istringstream short_file("4 4 U UW\n0 1\n");
    EXPECT_THROW(read_graph(short_file), FormatError);
    std::istringstream loop("2 1 U UW\n1 1\n");
    EXPECT_THROW(read_graph(loop), FormatError);
}

TEST(FailureSet, ParseAndResolve) {
    const Graph g = cycle(4);
    const FailureSet f = FailureSet::parse(g, "1-0 0-2");
    EXPECT_EQ(f.size(), 2u);
    const auto r = f.resolve(g);
    EXPECT_EQ(r.edges, (std::vector<EdgeId>{id(g, 0, 1)}));
    EXPECT_EQ(r.non_edges.size(), 1u);
    EXPECT_TRUE(FailureSet::parse(g, "").empty());
    EXPECT_THROW(FailureSet::parse(g, "0-1 1-0"), QueryError);
    EXPECT_THROW(FailureSet::parse(g, "0-0"), QueryError);
    EXPECT_THROW(FailureSet::parse(g, "0-9"), QueryError);
    EXPECT_THROW(FailureSet::parse(g, "0+1"), QueryError);
    const Graph d = cycle(3, true);
    EXPECT_EQ(FailureSet::parse(d, "1-0 0-1").size(), 2u);
}

}  // namespace
}  // namespace fdo
