#include "fdo/fdo_single.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

#include "fdo/dso.hpp"
#include "fdo/error.hpp"
#include "fdo/hitting_set.hpp"
#include "fdo/random.hpp"
#include "serialize_util.hpp"

namespace fdo {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g))
        throw PreconditionError(std::string(who) + " requires a " + (g.directed() ? "strongly " : "") +
                                "connected graph");
}

Distance lookup_sorted(const std::vector<std::pair<EdgeId, Distance>>& values, EdgeId e, Distance fallback) {
    auto it = std::lower_bound(values.begin(), values.end(), e,
                               [](const auto& entry, EdgeId id) { return entry.first < id; });
    return it != values.end() && it->first == e ? it->second : fallback;
}

std::vector<std::pair<EdgeId, Distance>> read_sparse(std::span<const std::string> lines, const Graph& g) {
    std::vector<std::pair<EdgeId, Distance>> out;
    for (const std::string& line : lines) out.push_back(parse_edge_entry(line, g.m()));
    if (!std::is_sorted(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; }) ||
        std::adjacent_find(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first == b.first; }) !=
            out.end())
        throw FormatError("entries must be sorted by edge id without repeats");
    return out;
}

std::vector<Distance> read_dense(std::span<const std::string> lines, const Graph& g) {
    if (lines.size() != g.m()) throw FormatError("expected one entry per edge");
    std::vector<Distance> table(g.m());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto [e, d] = parse_edge_entry(lines[i], g.m());
        if (e != i) throw FormatError("entries must list edge ids 0..m-1 in order");
        table[e] = d;
    }
    return table;
}

void write_dense(std::ostream& out, std::span<const Distance> table) {
    for (EdgeId e = 0; e < table.size(); ++e) out << e << ' ' << table[e].to_string() << '\n';
}

void write_sparse(std::ostream& out, const std::vector<std::pair<EdgeId, Distance>>& values) {
    for (const auto& [e, d] : values) out << e << ' ' << d.to_string() << '\n';
}

}  // namespace

// ---- ExactFDO ---------------------------------------------------------------

ExactFDO ExactFDO::build(const Graph& g) {
    require_connected(g, "exact FDO");
    SingleDSO dso(g);
    const Distance base = dso.base().diameter();
    std::vector<Distance> table(g.m(), base);
    for (VertexId v = 0; v < g.n(); ++v) {
        for (EdgeId e : dso.base().tree(v).tree_edges())
            table[e] = max(table[e], dso.replacement_tree(v, e)->max_dist());
        dso.evict(v);
    }
    for (EdgeId e : strong_bridges(g)) table[e] = Distance::infinity();
    return ExactFDO(g, std::move(table), base);
}

Distance ExactFDO::query(const FailureSet& failures) const {
    auto e = single_failure(graph(), failures);
    return e ? table_[*e] : base_;
}

void ExactFDO::serialize(std::ostream& out) const {
    write_header(out, kind(), graph(), {{"base_diam", base_.to_string()}});
    write_dense(out, table_);
}

std::unique_ptr<ExactFDO> ExactFDO::load(const OracleHeader& header, std::span<const std::string> lines,
                                         const Graph& g) {
    return std::unique_ptr<ExactFDO>(new ExactFDO(g, read_dense(lines, g), header.distance("base_diam")));
}

// ---- EccFDO -----------------------------------------------------------------

EccFDO EccFDO::build(const Graph& g) {
    if (g.directed()) throw PreconditionError("eccentricity FDO requires an undirected graph");
    require_connected(g, "eccentricity FDO");
    const VertexId s = 0;
    const ShortestPathTree tree = sssp(g, s);
    std::vector<std::pair<EdgeId, Distance>> values;
    for (EdgeId e : tree.tree_edges()) {
        const EdgeId failed[] = {e};
        Distance ecc = eccentricity(g, s, failed);
        values.emplace_back(e, ecc + ecc);
    }
    const Distance ecc = tree.max_dist();
    return EccFDO(g, std::move(values), ecc + ecc);
}

Distance EccFDO::query(const FailureSet& failures) const {
    auto e = single_failure(graph(), failures);
    return e ? lookup_sorted(tree_values_, *e, fallback_) : fallback_;
}

void EccFDO::serialize(std::ostream& out) const {
    write_header(out, kind(), graph(), {{"source", "0"}, {"fallback", fallback_.to_string()}});
    write_sparse(out, tree_values_);
}

std::unique_ptr<EccFDO> EccFDO::load(const OracleHeader& header, std::span<const std::string> lines,
                                     const Graph& g) {
    if (header.integer("source") != 0) throw FormatError("eccentricity FDO source must be 0");
    return std::unique_ptr<EccFDO>(new EccFDO(g, read_sparse(lines, g), header.distance("fallback")));
}

// ---- SpannerFDO -------------------------------------------------------------

std::vector<EdgeId> greedy_spanner(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("spanner parameter k must be >= 1");
    const std::size_t limit = 2 * static_cast<std::size_t>(k) - 1;
    std::vector<std::vector<VertexId>> adj(g.n());
    std::vector<std::size_t> depth(g.n(), SIZE_MAX);
    std::vector<VertexId> touched;
    std::vector<EdgeId> kept;

    auto within_limit = [&](VertexId from, VertexId to) {
        // bounded BFS in the current spanner
        std::queue<VertexId> queue;
        depth[from] = 0;
        touched.assign(1, from);
        queue.push(from);
        bool found = false;
        while (!queue.empty() && !found) {
            VertexId v = queue.front();
            queue.pop();
            if (depth[v] == limit) continue;
            for (VertexId w : adj[v]) {
                if (depth[w] != SIZE_MAX) continue;
                depth[w] = depth[v] + 1;
                touched.push_back(w);
                if (w == to) {
                    found = true;
                    break;
                }
                queue.push(w);
            }
        }
        for (VertexId v : touched) depth[v] = SIZE_MAX;
        return found;
    };

    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& edge = g.edge(e);
        if (within_limit(edge.u, edge.v)) continue;
        adj[edge.u].push_back(edge.v);
        adj[edge.v].push_back(edge.u);
        kept.push_back(e);
    }
    return kept;
}

SpannerFDO SpannerFDO::build(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("spanner parameter k must be >= 1");
    if (g.directed() || g.weighted()) throw PreconditionError("spanner FDO requires an undirected unweighted graph");
    require_connected(g, "spanner FDO");
    const ExactFDO exact = ExactFDO::build(g);
    std::vector<std::pair<EdgeId, Distance>> values;
    for (EdgeId e : greedy_spanner(g, k)) values.emplace_back(e, exact.entry(e));
    return SpannerFDO(g, k, std::move(values), exact.base_diameter());
}

Distance SpannerFDO::query(const FailureSet& failures) const {
    auto e = single_failure(graph(), failures);
    return e ? lookup_sorted(values_, *e, fallback()) : fallback();
}

void SpannerFDO::serialize(std::ostream& out) const {
    write_header(out, kind(), graph(), {{"k", std::to_string(k_)}, {"base_diam", base_.to_string()}});
    write_sparse(out, values_);
}

std::unique_ptr<SpannerFDO> SpannerFDO::load(const OracleHeader& header, std::span<const std::string> lines,
                                             const Graph& g) {
    const auto k = header.integer("k");
    if (k < 1) throw FormatError("spanner k must be >= 1");
    return std::unique_ptr<SpannerFDO>(
        new SpannerFDO(g, static_cast<int>(k), read_sparse(lines, g), header.distance("base_diam")));
}

// ---- pivots -----------------------------------------------------------------

std::vector<VertexId> random_pivots(const Graph& g, long theta, double c, std::uint64_t seed) {
    if (theta < 1) throw PreconditionError("random pivots require theta >= 1");
    const double n = static_cast<double>(g.n());
    const double p = std::min(1.0, c * std::log(n) / static_cast<double>(theta));
    Rng rng = Rng::stream(seed, 0, /*tag=*/0x9170);
    std::vector<VertexId> pivots;
    for (VertexId v = 0; v < g.n(); ++v)
        if (rng.bernoulli(p)) pivots.push_back(v);
    return pivots;
}

namespace {

// First `len` edges of v's path toward the root, as the len+1 vertices.
std::vector<VertexId> tree_prefix(const ShortestPathTree& tree, VertexId v, long len) {
    std::vector<VertexId> out{v};
    for (long i = 0; i < len && v != tree.root(); ++i) {
        v = tree.parent(v)->vertex;
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<VertexId> deterministic_pivots(const Graph& g, long theta) {
    if (theta < 1) throw PreconditionError("deterministic pivots require theta >= 1");
    if (g.n() == 0) return {};
    const long len = std::min<long>(theta, static_cast<long>(std::floor(std::sqrt(static_cast<double>(g.n())))));
    const VertexId root = 0;
    const ShortestPathTree base = in_tree(g, root);

    std::vector<char> bridge(g.m(), 0);
    for (EdgeId e : strong_bridges(g)) bridge[e] = 1;

    std::map<EdgeId, ShortestPathTree> failed_trees;
    auto tree_without = [&](EdgeId e) -> const ShortestPathTree& {
        auto it = failed_trees.find(e);
        if (it == failed_trees.end()) {
            const EdgeId failed[] = {e};
            it = failed_trees.emplace(e, in_tree(g, root, failed)).first;
        }
        return it->second;
    };

    const Distance limit(static_cast<double>(len));
    std::vector<std::vector<VertexId>> paths;
    for (VertexId s = 0; s < g.n(); ++s) {
        if (!base.reachable(s)) continue;
        if (base.dist(s) > limit) paths.push_back(tree_prefix(base, s, len));
        VertexId x = s;
        for (long i = 0; i < len && x != root; ++i) {
            const TreeStep step = *base.parent(x);
            if (!bridge[step.edge]) {
                const ShortestPathTree& alt = tree_without(step.edge);
                if (alt.reachable(s) && alt.dist(s) > limit) paths.push_back(tree_prefix(alt, s, len));
            }
            x = step.vertex;
        }
    }

    std::vector<VertexId> pivots = greedy_hitting_set(g.n(), paths);
    if (!std::binary_search(pivots.begin(), pivots.end(), root))
        pivots.insert(std::lower_bound(pivots.begin(), pivots.end(), root), root);
    return pivots;
}

// ---- ApproxFDO --------------------------------------------------------------

std::string_view scan_mode_name(ScanMode mode) {
    switch (mode) {
        case ScanMode::ExactScan: return "exact-scan";
        case ScanMode::RandomPivots: return "random";
        case ScanMode::DeterministicPivots: return "deterministic";
    }
    return "?";
}

ApproxFDO ApproxFDO::build(const Graph& g, const ApproxParams& params) {
    if (!(params.epsilon > 0)) throw PreconditionError("epsilon must be > 0");
    if (g.weighted()) throw PreconditionError("approximate FDO requires an unweighted graph");
    require_connected(g, "approximate FDO");

    ApproxFDO o(g);
    SingleDSO dso(g);
    o.base_ = dso.base().diameter();
    o.epsilon_ = params.epsilon;
    o.theta_ = static_cast<long>(std::floor(params.epsilon * o.base_.value()));
    o.seed_ = params.seed;
    o.table_.assign(g.m(), o.base_);

    const double log_n = g.n() > 1 ? std::ceil(std::log2(static_cast<double>(g.n()))) : 1.0;
    const bool exact_scan = o.theta_ < 1 || static_cast<double>(o.theta_) <= params.scan_factor * log_n;

    // Raise D[e] by d(x,t,e) for every t and every edge of the stored path P(x,t).
    auto scan_from = [&](VertexId x, const std::vector<char>* skip) {
        const ShortestPathTree& tree = dso.base().tree(x);
        for (VertexId t = 0; t < g.n(); ++t) {
            for (EdgeId e : tree.path_edges(t)) {
                if (skip && (*skip)[e]) continue;
                o.table_[e] = max(o.table_[e], dso.query(x, t, e));
            }
        }
        dso.evict(x);
    };

    if (exact_scan) {
        o.mode_ = ScanMode::ExactScan;
        for (VertexId s = 0; s < g.n(); ++s) scan_from(s, nullptr);
        return o;
    }

    std::vector<char> bridge(g.m(), 0);
    for (EdgeId e : strong_bridges(g)) {
        bridge[e] = 1;
        o.table_[e] = Distance::infinity();
    }
    if (params.pivots == PivotMode::Random) {
        o.mode_ = ScanMode::RandomPivots;
        o.pivots_ = random_pivots(g, o.theta_, params.pivot_c, params.seed);
    } else {
        o.mode_ = ScanMode::DeterministicPivots;
        o.pivots_ = deterministic_pivots(g, o.theta_);
    }
    for (VertexId x : o.pivots_) scan_from(x, &bridge);
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!bridge[e]) o.table_[e] = o.table_[e] + static_cast<double>(o.theta_);
    return o;
}

Distance ApproxFDO::query(const FailureSet& failures) const {
    auto e = single_failure(graph(), failures);
    return e ? table_[*e] : base_;
}

void ApproxFDO::serialize(std::ostream& out) const {
    write_header(out, kind(), graph(),
                 {{"epsilon", format_number(epsilon_)},
                  {"theta", std::to_string(theta_)},
                  {"mode", std::string(scan_mode_name(mode_))},
                  {"seed", std::to_string(seed_)},
                  {"base_diam", base_.to_string()},
                  {"pivots", format_id_list(pivots_)}});
    write_dense(out, table_);
}

std::unique_ptr<ApproxFDO> ApproxFDO::load(const OracleHeader& header, std::span<const std::string> lines,
                                           const Graph& g) {
    std::unique_ptr<ApproxFDO> o(new ApproxFDO(g));
    o->epsilon_ = header.number("epsilon");
    o->theta_ = static_cast<long>(header.integer("theta"));
    o->seed_ = header.integer("seed");
    o->base_ = header.distance("base_diam");
    const std::string& mode = header.at("mode");
    if (mode == "exact-scan")
        o->mode_ = ScanMode::ExactScan;
    else if (mode == "random")
        o->mode_ = ScanMode::RandomPivots;
    else if (mode == "deterministic")
        o->mode_ = ScanMode::DeterministicPivots;
    else
        throw FormatError("unknown approx mode '" + mode + "'");
    o->pivots_ = parse_id_list(header.at("pivots"), g.n());
    o->table_ = read_dense(lines, g);
    return o;
}

}  // namespace fdo
