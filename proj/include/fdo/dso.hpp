#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fdo/shortest_paths.hpp"

namespace fdo {

/// Exact single-failure distance sensitivity oracle.
///
/// Keeps one shortest-path tree per source. A query (s,t,e) with e off the
/// stored path P(s,t) is answered from that tree; otherwise the tree of G-e
/// from s is computed once and cached. The cache is safe under concurrent
/// queries.
class SingleDSO {
public:
    explicit SingleDSO(const Graph& g);
    SingleDSO(const Graph& g, AllPairs base);

    Distance query(VertexId s, VertexId t, EdgeId e) const;

    /// Shortest-path tree from s in G-e (memoized).
    std::shared_ptr<const ShortestPathTree> replacement_tree(VertexId s, EdgeId e) const;

    const AllPairs& base() const { return base_; }
    const Graph& graph() const { return *g_; }

    /// Drops cached trees of one source; builders call this once a source is done.
    void evict(VertexId s) const;
    std::size_t cached_trees() const;
    /// Number of replacement trees computed so far (cache misses).
    std::size_t recomputations() const;

private:
    const Graph* g_;
    AllPairs base_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, std::shared_ptr<const ShortestPathTree>> cache_;
    mutable std::size_t misses_ = 0;
};

struct DsoAnswer {
    Distance dist = Distance::infinity();
    std::optional<Path> path;  // present iff dist is finite
};

/// Path-reporting f-DSO: replacement distance and a path in G - F.
class PathReportingDSO {
public:
    virtual ~PathReportingDSO() = default;
    /// `failures` must be edge ids of the graph, at most max_failures() of them.
    virtual DsoAnswer query(VertexId s, VertexId t, std::span<const EdgeId> failures) const = 0;
    virtual std::size_t max_failures() const = 0;
    virtual bool exact() const = 0;
};

/// Exact f-DSO by one shortest-path computation per distinct (s, F), memoized.
class ExactFDSO final : public PathReportingDSO {
public:
    ExactFDSO(const Graph& g, std::size_t f) : g_(&g), f_(f) {}

    DsoAnswer query(VertexId s, VertexId t, std::span<const EdgeId> failures) const override;
    std::size_t max_failures() const override { return f_; }
    bool exact() const override { return true; }
    std::size_t cached_trees() const;
    /// Drops every memoized tree.
    void clear() const;

private:
    const Graph* g_;
    std::size_t f_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<VertexId, std::vector<EdgeId>>, std::shared_ptr<const ShortestPathTree>> cache_;
};

struct SampledDsoParams {
    std::size_t f = 2;
    double delta = 1.0;
    double c = 3.0;
    std::uint64_t seed = 1;
    /// Build is refused when k * n^2 exceeds this many stored distances.
    std::size_t max_entries = std::size_t{1} << 28;
};

/// Number of sampled subgraphs: ceil(C * f * n^delta * ln n), at least 1.
std::size_t sampled_subgraph_count(std::size_t n, std::size_t f, double delta, double c);

/// Path-reporting f-DSO over k random spanning subgraphs.
///
/// Subgraph i drops every edge independently with probability n^(-delta/f),
/// using the random stream (seed, i). A query takes the minimum distance over
/// the subgraphs that miss every failed edge, found by intersecting the sorted
/// per-edge lists S_e. Reported values are lengths of real paths in G - F, so
/// they never underestimate; they are exact with high probability.
/// Restricted to undirected unweighted graphs.
class SampledFDSO final : public PathReportingDSO {
public:
    SampledFDSO(const Graph& g, const SampledDsoParams& params);

    DsoAnswer query(VertexId s, VertexId t, std::span<const EdgeId> failures) const override;
    std::size_t max_failures() const override { return params_.f; }
    bool exact() const override { return false; }

    std::size_t k() const { return subgraphs_.size(); }
    const SampledDsoParams& params() const { return params_; }
    double exclusion_probability() const { return exclusion_p_; }
    /// Sorted indices of the subgraphs that exclude e.
    std::span<const std::uint32_t> excluding(EdgeId e) const { return s_e_[e]; }
    bool subgraph_contains(std::size_t i, EdgeId e) const { return !excluded_[i].contains(e); }
    /// S_F: indices of subgraphs excluding every edge of `failures`.
    std::vector<std::uint32_t> intersect(std::span<const EdgeId> failures) const;

private:
    const Graph* g_;
    SampledDsoParams params_;
    double exclusion_p_ = 0.0;
    std::vector<EdgeSet> excluded_;
    std::vector<AllPairs> subgraphs_;
    std::vector<std::vector<std::uint32_t>> s_e_;
};

}  // namespace fdo
