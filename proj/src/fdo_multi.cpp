#include "fdo/fdo_multi.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "fdo/error.hpp"
#include "serialize_util.hpp"

namespace fdo {

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

MultiFDO MultiFDO::build(const Graph& g, std::size_t f, bool tight) {
    if (g.directed()) throw PreconditionError("multi-failure FDO requires an undirected graph");
    if (f < 1) throw PreconditionError("multi-failure FDO requires f >= 1");
    if (g.n() == 0 || !is_connected(g)) throw PreconditionError("multi-failure FDO requires a connected graph");

    MultiFDO o(g);
    o.f_ = f;
    o.tight_ = tight;
    o.tree_ = sssp(g, o.source());
    o.in_tree_.assign(g.m(), 0);
    for (EdgeId e : o.tree_.tree_edges()) o.in_tree_[e] = 1;
    o.wprime_.assign(g.m(), 0.0);
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (o.in_tree_[e]) continue;
        const Edge& edge = g.edge(e);
        o.wprime_[e] = o.tree_.dist(edge.u).value() + edge.w + o.tree_.dist(edge.v).value();
    }
    o.maxdist_ = o.tree_.max_dist();
    o.index_tree();
    if (f == 1) o.compute_swaps();
    return o;
}

void MultiFDO::index_tree() {
    const Graph& g = graph();
    std::vector<std::vector<VertexId>> children(g.n());
    for (VertexId v = 0; v < g.n(); ++v)
        if (const auto& p = tree_.parent(v)) children[p->vertex].push_back(v);
    tin_.assign(g.n(), 0);
    tout_.assign(g.n(), 0);
    std::uint32_t clock = 0;
    std::vector<std::pair<VertexId, std::size_t>> stack{{source(), 0}};
    tin_[source()] = clock++;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < children[v].size()) {
            VertexId c = children[v][next++];
            tin_[c] = clock++;
            stack.emplace_back(c, 0);
        } else {
            tout_[v] = clock;
            stack.pop_back();
        }
    }
}

void MultiFDO::compute_swaps() {
    const Graph& g = graph();
    std::vector<std::uint32_t> depth(g.n(), 0);
    std::vector<VertexId> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return tin_[a] < tin_[b]; });
    for (VertexId v : order)
        if (const auto& p = tree_.parent(v)) depth[v] = depth[p->vertex] + 1;

    std::vector<EdgeId> candidates;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!in_tree_[e]) candidates.push_back(e);
    std::sort(candidates.begin(), candidates.end(),
              [&](EdgeId a, EdgeId b) { return wprime_[a] != wprime_[b] ? wprime_[a] < wprime_[b] : a < b; });

    swap_.assign(g.m(), std::nullopt);
    for (EdgeId c : candidates) {
        VertexId x = g.edge(c).u, y = g.edge(c).v;
        while (x != y) {
            if (depth[x] < depth[y]) std::swap(x, y);
            const TreeStep& step = *tree_.parent(x);
            if (!swap_[step.edge]) swap_[step.edge] = c;
            x = step.vertex;
        }
    }
}

std::optional<EdgeId> MultiFDO::swap_edge(EdgeId e) const {
    return e < swap_.size() ? swap_[e] : std::nullopt;
}

std::size_t MultiFDO::stored_entries() const {
    const std::size_t tree_links = graph().n() - 1;
    return f_ == 1 ? 2 * tree_links : tree_links;
}

std::vector<EdgeId> MultiFDO::check_and_resolve(const FailureSet& failures) const {
    if (failures.size() > f_) throw QueryError("too many failures");
    return failures.resolve(graph()).edges;
}

Distance MultiFDO::combine(double delta, std::size_t k) const {
    const double multiplier = static_cast<double>(tight_ ? k : f_);
    return Distance(multiplier * delta) + (maxdist_ + maxdist_);
}

Distance MultiFDO::query(const FailureSet& failures) const {
    if (f_ != 1) return explain(failures).answer;
    const std::vector<EdgeId> edges = check_and_resolve(failures);
    if (edges.empty() || !in_tree_[edges[0]]) return combine(0.0, 0);
    const EdgeId e = edges[0];
    if (!swap_[e]) return Distance::infinity();
    const Edge& edge = graph().edge(e);
    const VertexId child = tree_.parent(edge.v) && tree_.parent(edge.v)->edge == e ? edge.v : edge.u;
    return combine(wprime_[*swap_[e]] - tree_.dist(child).value(), 1);
}

MultiExplain MultiFDO::explain(const FailureSet& failures) const {
    const Graph& g = graph();
    const std::vector<EdgeId> edges = check_and_resolve(failures);
    MultiExplain x;
    x.roots.push_back(source());
    for (EdgeId e : edges)
        if (in_tree_[e]) x.failed_tree.push_back(e);
    auto child_of = [&](EdgeId e) {
        const Edge& edge = g.edge(e);
        return tree_.parent(edge.v) && tree_.parent(edge.v)->edge == e ? edge.v : edge.u;
    };
    std::sort(x.failed_tree.begin(), x.failed_tree.end(),
              [&](EdgeId a, EdgeId b) { return tin_[child_of(a)] < tin_[child_of(b)]; });
    for (EdgeId e : x.failed_tree) x.roots.push_back(child_of(e));
    const std::size_t k = x.failed_tree.size();
    x.parent_edge.assign(k + 1, std::nullopt);
    if (k == 0) {
        x.answer = combine(0.0, 0);
        return x;
    }

    // Component i >= 1 is the subtree of r_i minus the subtrees of deeper failed edges.
    std::vector<std::uint32_t> comp(g.n(), 0);
    for (VertexId v = 0; v < g.n(); ++v)
        for (std::size_t i = 1; i <= k; ++i)
            if (tin_[x.roots[i]] <= tin_[v] && tin_[v] < tout_[x.roots[i]]) comp[v] = static_cast<std::uint32_t>(i);

    EdgeSet failed(g.m(), edges);
    auto better = [&](EdgeId a, EdgeId b) { return wprime_[a] != wprime_[b] ? wprime_[a] < wprime_[b] : a < b; };
    std::vector<std::optional<EdgeId>> best((k + 1) * (k + 1));
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (failed.contains(e)) continue;
        std::uint32_t a = comp[g.edge(e).u], b = comp[g.edge(e).v];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        auto& slot = best[a * (k + 1) + b];
        if (!slot || better(e, *slot)) slot = e;
    }
    std::vector<EdgeId> candidates;
    for (const auto& slot : best)
        if (slot) candidates.push_back(*slot);
    std::sort(candidates.begin(), candidates.end(), better);

    DisjointSets sets(k + 1);
    std::vector<std::vector<std::pair<std::uint32_t, EdgeId>>> adj(k + 1);
    for (EdgeId e : candidates) {
        const std::uint32_t a = comp[g.edge(e).u], b = comp[g.edge(e).v];
        if (!sets.unite(a, b)) continue;
        x.swap_edges.push_back(e);
        x.forest_weight += wprime_[e];
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    std::sort(x.swap_edges.begin(), x.swap_edges.end());
    if (x.swap_edges.size() != k) {
        x.connected = false;
        x.answer = Distance::infinity();
        return x;
    }

    std::vector<char> seen(k + 1, 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto [c, e] : adj[queue[head]]) {
            if (seen[c]) continue;
            seen[c] = 1;
            x.parent_edge[c] = e;
            queue.push_back(c);
        }
    }
    for (std::size_t i = 1; i <= k; ++i)
        x.delta = std::max(x.delta, wprime_[*x.parent_edge[i]] - tree_.dist(x.roots[i]).value());
    x.answer = combine(x.delta, k);
    return x;
}

void MultiFDO::serialize(std::ostream& out) const {
    write_header(out, kind(), graph(),
                 {{"f", std::to_string(f_)},
                  {"tight", tight_ ? "1" : "0"},
                  {"source", "0"},
                  {"maxdist", maxdist_.to_string()}});
    for (EdgeId e = 0; e < graph().m(); ++e) {
        out << e << ' ' << format_number(wprime_[e]);
        if (in_tree_[e]) {
            out << " tree";
            if (f_ == 1) out << ' ' << (swap_[e] ? std::to_string(*swap_[e]) : "-");
        }
        out << '\n';
    }
}

std::unique_ptr<MultiFDO> MultiFDO::load(const OracleHeader& header, std::span<const std::string> lines,
                                         const Graph& g) {
    if (g.directed()) throw FormatError("multi-failure FDO file paired with a directed graph");
    if (header.integer("source") != 0) throw FormatError("multi-failure FDO source must be 0");
    std::unique_ptr<MultiFDO> o(new MultiFDO(g));
    o->f_ = header.integer("f");
    if (o->f_ < 1) throw FormatError("f must be >= 1");
    o->tight_ = header.integer("tight") != 0;
    o->maxdist_ = header.distance("maxdist");
    if (lines.size() != g.m()) throw FormatError("expected one entry per edge");

    o->in_tree_.assign(g.m(), 0);
    o->wprime_.assign(g.m(), 0.0);
    if (o->f_ == 1) o->swap_.assign(g.m(), std::nullopt);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto fields = split_fields(lines[i]);
        if (fields.size() < 2 || parse_unsigned(fields[0]) != i) throw FormatError("entries must list edge ids in order");
        auto w = parse_number(fields[1]);
        if (!w || !(*w >= 0)) throw FormatError("bad w' value in '" + lines[i] + "'");
        o->wprime_[i] = *w;
        const std::size_t expected = fields.size() == 2 ? 2 : (o->f_ == 1 ? 4 : 3);
        if (fields.size() != expected || (fields.size() > 2 && fields[2] != "tree"))
            throw FormatError("bad entry line '" + lines[i] + "'");
        if (fields.size() == 2) continue;
        o->in_tree_[i] = 1;
        if (o->f_ == 1 && fields[3] != "-") {
            const auto s = parse_unsigned(fields[3]);
            if (s >= g.m()) throw FormatError("swap edge out of range");
            o->swap_[i] = static_cast<EdgeId>(s);
        }
    }

    // Rebuild the tree from its edges.
    const std::size_t n = g.n();
    std::vector<std::optional<TreeStep>> parent(n);
    std::vector<Distance> dist(n, Distance::infinity());
    dist[0] = Distance::zero();
    std::vector<VertexId> queue{0};
    std::size_t tree_edges = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (const Incidence& inc : g.out(v)) {
            if (!o->in_tree_[inc.edge] || dist[inc.to].is_finite()) continue;
            dist[inc.to] = dist[v] + g.edge(inc.edge).w;
            parent[inc.to] = TreeStep{v, inc.edge};
            queue.push_back(inc.to);
            ++tree_edges;
        }
    }
    if (queue.size() != n || tree_edges + 1 != n ||
        static_cast<std::size_t>(std::count(o->in_tree_.begin(), o->in_tree_.end(), 1)) != n - 1)
        throw FormatError("tree edges do not form a spanning tree");
    o->tree_ = ShortestPathTree(0, TreeDirection::FromSource, std::move(parent), std::move(dist));
    o->index_tree();
    return o;
}

}  // namespace fdo
