#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fdo/distance.hpp"

namespace fdo {

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 1.0;
};

/// One entry of an incidence list: the vertex on the other side and the edge id.
struct Incidence {
    VertexId to = 0;
    EdgeId edge = 0;
};

/// Immutable simple graph with indexed edges.
///
/// For undirected graphs every edge appears in both endpoints' out- and
/// in-lists, so the same traversal code serves both cases.
class Graph {
public:
    Graph() = default;

    /// Validates and indexes an edge list. Throws GraphError on self-loops,
    /// duplicate pairs (orientation-aware for directed graphs), out-of-range ids,
    /// negative or non-finite weights, or a non-unit weight in an unweighted graph.
    static Graph build(std::size_t n, bool directed, std::vector<Edge> edges, bool weighted = false);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    bool directed() const { return directed_; }
    bool weighted() const { return weighted_; }
    /// True when every weight is an integer, so all distances are exact.
    bool integral_weights() const { return integral_; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Incidence> out(VertexId v) const {
        return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
    }
    std::span<const Incidence> in(VertexId v) const {
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }

    /// Edge id of the pair (u,v); unordered for undirected graphs.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    /// The endpoint of e opposite to x (x must be an endpoint).
    VertexId other(EdgeId e, VertexId x) const { return edges_[e].u == x ? edges_[e].v : edges_[e].u; }

    /// Same vertices and edge ids, every edge reversed.
    Graph reversed() const;

    /// 64-bit FNV-1a over the canonical edge list; used to pair oracle files with graphs.
    std::uint64_t fingerprint() const;

private:
    std::uint64_t key(VertexId u, VertexId v) const;

    std::size_t n_ = 0;
    bool directed_ = false;
    bool weighted_ = false;
    bool integral_ = true;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> out_off_{0};
    std::vector<Incidence> out_adj_;
    std::vector<std::uint32_t> in_off_{0};
    std::vector<Incidence> in_adj_;
    std::unordered_map<std::uint64_t, EdgeId> lookup_;
};

/// Membership mask over edge ids, used to describe G - F.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t m) : bits_(m, 0) {}
    EdgeSet(std::size_t m, std::span<const EdgeId> ids);

    bool contains(EdgeId e) const { return e < bits_.size() && bits_[e] != 0; }
    void insert(EdgeId e) {
        if (e >= bits_.size()) bits_.resize(e + 1, 0);
        bits_[e] = 1;
    }
    void erase(EdgeId e) {
        if (e < bits_.size()) bits_[e] = 0;
    }
    bool empty() const;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace fdo
