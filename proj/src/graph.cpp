#include "fdo/graph.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "fdo/error.hpp"

namespace fdo {

namespace {

std::string describe(const Edge& e) {
    std::ostringstream os;
    os << "(" << e.u << "," << e.v << "," << format_number(e.w) << ")";
    return os.str();
}

void fill_csr(std::size_t n, const std::vector<Edge>& edges, bool directed, bool outgoing,
              std::vector<std::uint32_t>& off, std::vector<Incidence>& adj) {
    off.assign(n + 1, 0);
    for (const Edge& e : edges) {
        if (directed) {
            ++off[(outgoing ? e.u : e.v) + 1];
        } else {
            ++off[e.u + 1];
            ++off[e.v + 1];
        }
    }
    for (std::size_t v = 0; v < n; ++v) off[v + 1] += off[v];
    adj.assign(off[n], {});
    std::vector<std::uint32_t> cursor(off.begin(), off.end() - 1);
    for (EdgeId id = 0; id < edges.size(); ++id) {
        const Edge& e = edges[id];
        if (directed) {
            if (outgoing)
                adj[cursor[e.u]++] = {e.v, id};
            else
                adj[cursor[e.v]++] = {e.u, id};
        } else {
            adj[cursor[e.u]++] = {e.v, id};
            adj[cursor[e.v]++] = {e.u, id};
        }
    }
}

}  // namespace

std::uint64_t Graph::key(VertexId u, VertexId v) const {
    if (!directed_ && v < u) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

Graph Graph::build(std::size_t n, bool directed, std::vector<Edge> edges, bool weighted) {
    if (n > 0xFFFFFFFFu) throw GraphError("vertex count too large");
    Graph g;
    g.n_ = n;
    g.directed_ = directed;
    g.weighted_ = weighted;
    g.lookup_.reserve(edges.size() * 2);
    for (EdgeId id = 0; id < edges.size(); ++id) {
        const Edge& e = edges[id];
        if (e.u >= n || e.v >= n) throw GraphError("vertex id out of range in edge " + describe(e));
        if (e.u == e.v) throw GraphError("self-loop " + describe(e));
        if (!std::isfinite(e.w) || e.w < 0) throw GraphError("negative or non-finite weight in edge " + describe(e));
        if (!weighted && e.w != 1.0) throw GraphError("non-unit weight in unweighted graph: " + describe(e));
        if (e.w != std::floor(e.w)) g.integral_ = false;
        if (!g.lookup_.emplace(g.key(e.u, e.v), id).second)
            throw GraphError("duplicate vertex pair " + describe(e));
    }
    g.edges_ = std::move(edges);
    fill_csr(n, g.edges_, directed, true, g.out_off_, g.out_adj_);
    fill_csr(n, g.edges_, directed, false, g.in_off_, g.in_adj_);
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_ || u == v) return std::nullopt;
    auto it = lookup_.find(key(u, v));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::reversed() const {
    if (!directed_) return *this;
    std::vector<Edge> rev(edges_);
    for (Edge& e : rev) std::swap(e.u, e.v);
    return build(n_, true, std::move(rev), weighted_);
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(n_);
    mix(directed_ ? 1 : 0);
    for (const Edge& e : edges_) {
        mix(e.u);
        mix(e.v);
        std::uint64_t bits;
        static_assert(sizeof bits == sizeof e.w);
        std::memcpy(&bits, &e.w, sizeof bits);
        mix(bits);
    }
    return h;
}

EdgeSet::EdgeSet(std::size_t m, std::span<const EdgeId> ids) : bits_(m, 0) {
    for (EdgeId e : ids) insert(e);
}

bool EdgeSet::empty() const {
    for (auto b : bits_)
        if (b) return false;
    return true;
}

}  // namespace fdo
