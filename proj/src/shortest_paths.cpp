#include "fdo/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace fdo {

namespace {

constexpr std::uint32_t kUnsettled = 0xFFFFFFFFu;

// Shared engine for out-trees and in-trees. `forward` selects which incidence
// list is relaxed; the parent pass reads the opposite one.
ShortestPathTree grow_tree(const Graph& g, VertexId root, const EdgeSet& excluded, TreeDirection dir) {
    const std::size_t n = g.n();
    const bool from_source = dir == TreeDirection::FromSource;
    auto relax_list = [&](VertexId v) { return from_source ? g.out(v) : g.in(v); };
    auto parent_list = [&](VertexId v) { return from_source ? g.in(v) : g.out(v); };

    std::vector<Distance> dist(n, Distance::infinity());
    std::vector<std::uint32_t> rank(n, kUnsettled);
    std::vector<VertexId> order;
    order.reserve(n);
    dist[root] = Distance::zero();

    if (!g.weighted()) {
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            rank[v] = static_cast<std::uint32_t>(order.size());
            order.push_back(v);
            for (const Incidence& inc : relax_list(v)) {
                if (excluded.contains(inc.edge) || dist[inc.to].is_finite()) continue;
                dist[inc.to] = dist[v] + 1.0;
                queue.push(inc.to);
            }
        }
    } else {
        using Item = std::pair<double, VertexId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.emplace(0.0, root);
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (rank[v] != kUnsettled || d != dist[v].value()) continue;
            rank[v] = static_cast<std::uint32_t>(order.size());
            order.push_back(v);
            for (const Incidence& inc : relax_list(v)) {
                if (excluded.contains(inc.edge) || rank[inc.to] != kUnsettled) continue;
                Distance cand = dist[v] + g.edge(inc.edge).w;
                if (cand < dist[inc.to]) {
                    dist[inc.to] = cand;
                    heap.emplace(cand.value(), inc.to);
                }
            }
        }
    }

    std::vector<std::optional<TreeStep>> parent(n);
    for (VertexId v : order) {
        if (v == root) continue;
        std::optional<TreeStep> best;
        for (const Incidence& inc : parent_list(v)) {
            VertexId u = inc.to;
            if (excluded.contains(inc.edge) || rank[u] >= rank[v]) continue;
            if (dist[u] + g.edge(inc.edge).w != dist[v]) continue;
            if (!best || u < best->vertex) best = TreeStep{u, inc.edge};
        }
        parent[v] = best;
    }
    return ShortestPathTree(root, dir, std::move(parent), std::move(dist));
}

}  // namespace

Distance ShortestPathTree::max_dist() const {
    Distance best = Distance::zero();
    for (Distance d : dist_) best = max(best, d);
    return best;
}

std::optional<Path> ShortestPathTree::path(VertexId v) const {
    if (!reachable(v)) return std::nullopt;
    Path p;
    p.length = dist_[v];
    p.vertices.push_back(v);
    for (VertexId x = v; x != root_;) {
        const TreeStep& step = *parent_[x];
        p.edges.push_back(step.edge);
        p.vertices.push_back(step.vertex);
        x = step.vertex;
    }
    if (dir_ == TreeDirection::FromSource) {
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.edges.begin(), p.edges.end());
    }
    return p;
}

std::vector<EdgeId> ShortestPathTree::path_edges(VertexId v) const {
    std::vector<EdgeId> out;
    if (!reachable(v)) return out;
    for (VertexId x = v; x != root_; x = parent_[x]->vertex) out.push_back(parent_[x]->edge);
    if (dir_ == TreeDirection::FromSource) std::reverse(out.begin(), out.end());
    return out;
}

bool ShortestPathTree::path_contains(VertexId v, EdgeId e) const {
    if (!reachable(v)) return false;
    for (VertexId x = v; x != root_; x = parent_[x]->vertex)
        if (parent_[x]->edge == e) return true;
    return false;
}

std::vector<EdgeId> ShortestPathTree::tree_edges() const {
    std::vector<EdgeId> out;
    for (const auto& p : parent_)
        if (p) out.push_back(p->edge);
    std::sort(out.begin(), out.end());
    return out;
}

ShortestPathTree sssp(const Graph& g, VertexId source, const EdgeSet& excluded) {
    return grow_tree(g, source, excluded, TreeDirection::FromSource);
}

ShortestPathTree sssp(const Graph& g, VertexId source, std::span<const EdgeId> excluded) {
    return sssp(g, source, EdgeSet(g.m(), excluded));
}

ShortestPathTree in_tree(const Graph& g, VertexId root, const EdgeSet& excluded) {
    return grow_tree(g, root, excluded, g.directed() ? TreeDirection::ToRoot : TreeDirection::FromSource);
}

ShortestPathTree in_tree(const Graph& g, VertexId root, std::span<const EdgeId> excluded) {
    return in_tree(g, root, EdgeSet(g.m(), excluded));
}

AllPairs::AllPairs(const Graph& g, const EdgeSet& excluded) {
    trees_.reserve(g.n());
    for (VertexId s = 0; s < g.n(); ++s) trees_.push_back(sssp(g, s, excluded));
}

Distance AllPairs::diameter() const {
    Distance best = Distance::zero();
    for (const auto& t : trees_) best = max(best, t.max_dist());
    return best;
}

Distance eccentricity(const Graph& g, VertexId v, std::span<const EdgeId> excluded) {
    return sssp(g, v, excluded).max_dist();
}

Distance diameter(const Graph& g, const EdgeSet& excluded) {
    if (!is_connected(g, excluded)) return Distance::infinity();
    Distance best = Distance::zero();
    for (VertexId s = 0; s < g.n(); ++s) best = max(best, sssp(g, s, excluded).max_dist());
    return best;
}

Distance diameter(const Graph& g, std::span<const EdgeId> excluded) {
    return diameter(g, EdgeSet(g.m(), excluded));
}

bool is_connected(const Graph& g, const EdgeSet& excluded) {
    const std::size_t n = g.n();
    if (n <= 1) return true;
    auto reach_all = [&](bool forward) {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Incidence& inc : forward ? g.out(v) : g.in(v)) {
                if (seen[inc.to] || excluded.contains(inc.edge)) continue;
                seen[inc.to] = 1;
                ++count;
                stack.push_back(inc.to);
            }
        }
        return count == n;
    };
    if (!reach_all(true)) return false;
    return !g.directed() || reach_all(false);
}

std::vector<EdgeId> strong_bridges(const Graph& g) {
    std::vector<EdgeId> out;
    EdgeSet mask(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        mask.insert(e);
        if (!is_connected(g, mask)) out.push_back(e);
        mask.erase(e);
    }
    return out;
}

}  // namespace fdo
