#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fdo/graph.hpp"

namespace fdo {

enum class TreeDirection { FromSource, ToRoot };

/// Tree step toward the source (out-trees) or toward the root (in-trees).
struct TreeStep {
    VertexId vertex = 0;
    EdgeId edge = 0;
};

struct Path {
    std::vector<VertexId> vertices;  // first is the path start
    std::vector<EdgeId> edges;
    Distance length;
};

/// Shortest-path tree rooted at one vertex of a graph with some edges removed.
///
/// For FromSource trees parent(v) is the predecessor of v on the source-to-v
/// path. For ToRoot trees parent(v) is the successor of v on the v-to-root path.
class ShortestPathTree {
public:
    ShortestPathTree() = default;
    ShortestPathTree(VertexId root, TreeDirection dir, std::vector<std::optional<TreeStep>> parent,
                     std::vector<Distance> dist)
        : root_(root), dir_(dir), parent_(std::move(parent)), dist_(std::move(dist)) {}

    VertexId root() const { return root_; }
    TreeDirection direction() const { return dir_; }
    std::size_t size() const { return dist_.size(); }
    Distance dist(VertexId v) const { return dist_[v]; }
    std::span<const Distance> dists() const { return dist_; }
    const std::optional<TreeStep>& parent(VertexId v) const { return parent_[v]; }
    bool reachable(VertexId v) const { return dist_[v].is_finite(); }

    /// Largest distance in the tree; infinity if some vertex is unreachable.
    Distance max_dist() const;

    /// Path between the root and v: root..v for FromSource, v..root for ToRoot.
    /// Empty optional when v is unreachable.
    std::optional<Path> path(VertexId v) const;

    /// Edge ids on the root/v path, without building the vertex list.
    std::vector<EdgeId> path_edges(VertexId v) const;

    /// True when e lies on the tree path between the root and v.
    bool path_contains(VertexId v, EdgeId e) const;

    /// Every edge used as a parent link.
    std::vector<EdgeId> tree_edges() const;

private:
    VertexId root_ = 0;
    TreeDirection dir_ = TreeDirection::FromSource;
    std::vector<std::optional<TreeStep>> parent_;
    std::vector<Distance> dist_;
};

/// Single-source shortest paths in g minus `excluded`. Breadth-first search on
/// unweighted graphs, Dijkstra otherwise. Among equal-distance parents the
/// smallest vertex id wins (restricted to vertices settled earlier, so
/// zero-weight edges cannot form parent cycles).
ShortestPathTree sssp(const Graph& g, VertexId source, const EdgeSet& excluded = {});
ShortestPathTree sssp(const Graph& g, VertexId source, std::span<const EdgeId> excluded);

/// Tree of shortest paths into `root`; identical to sssp for undirected graphs.
ShortestPathTree in_tree(const Graph& g, VertexId root, const EdgeSet& excluded = {});
ShortestPathTree in_tree(const Graph& g, VertexId root, std::span<const EdgeId> excluded);

/// n shortest-path trees, one per source.
class AllPairs {
public:
    AllPairs() = default;
    explicit AllPairs(const Graph& g, const EdgeSet& excluded = {});

    std::size_t n() const { return trees_.size(); }
    Distance dist(VertexId s, VertexId t) const { return trees_[s].dist(t); }
    const ShortestPathTree& tree(VertexId s) const { return trees_[s]; }
    /// max over all entries; infinity if some pair is disconnected.
    Distance diameter() const;

private:
    std::vector<ShortestPathTree> trees_;
};

Distance eccentricity(const Graph& g, VertexId v, std::span<const EdgeId> excluded = {});
Distance diameter(const Graph& g, std::span<const EdgeId> excluded = {});
Distance diameter(const Graph& g, const EdgeSet& excluded);

/// True when g minus `excluded` is connected (strongly connected if directed).
bool is_connected(const Graph& g, const EdgeSet& excluded = {});

/// Edges whose removal breaks (strong) connectivity. Brute force, O(m(n+m)).
std::vector<EdgeId> strong_bridges(const Graph& g);

}  // namespace fdo
