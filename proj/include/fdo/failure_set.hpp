#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdo/graph.hpp"

namespace fdo {

using VertexPair = std::pair<VertexId, VertexId>;

/// A set of vertex pairs to fail. Pairs are unordered on undirected graphs;
/// they may name non-edges, which leave the graph unchanged.
class FailureSet {
public:
    FailureSet() = default;

    /// Throws QueryError on a pair with equal or out-of-range endpoints and on
    /// duplicate pairs.
    FailureSet(const Graph& g, std::vector<VertexPair> pairs);

    /// Failure set naming existing edges by id.
    static FailureSet of_edges(const Graph& g, std::span<const EdgeId> edges);

    /// Parses the query-line form "u-v u-v ...". Empty line means F = {}.
    static FailureSet parse(const Graph& g, std::string_view line);

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<VertexPair>& pairs() const { return pairs_; }

    struct Resolved {
        std::vector<EdgeId> edges;  // sorted ascending
        std::vector<VertexPair> non_edges;
    };
    Resolved resolve(const Graph& g) const;

    std::string to_string() const;

private:
    std::vector<VertexPair> pairs_;
};

}  // namespace fdo
