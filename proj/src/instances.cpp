#include "fdo/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "fdo/error.hpp"
#include "fdo/random.hpp"
#include "fdo/shortest_paths.hpp"
#include "json.hpp"

namespace fdo {

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    BitMatrix x{rows, cols, std::vector<std::uint8_t>(rows * cols)};
    Rng rng = Rng::stream(seed, 0, /*tag=*/0xB175);
    for (auto& b : x.bits) b = static_cast<std::uint8_t>(rng.next() >> 63);
    return x;
}

std::vector<std::uint8_t> decode(const GadgetInstance& gadget,
                                 const std::function<Distance(const FailureSet&)>& answer) {
    std::vector<std::uint8_t> bits(gadget.payload.size(), 0);
    for (const DecodeQuery& q : gadget.queries) bits[q.bit] = answer(q.failures) <= q.threshold ? 1 : 0;
    return bits;
}

namespace {

struct LbLayout {
    std::size_t r;
    VertexId a(std::size_t i) const { return static_cast<VertexId>(i); }
    VertexId b(std::size_t i) const { return static_cast<VertexId>(r + i); }
    VertexId c(std::size_t i) const { return static_cast<VertexId>(2 * r + i); }
    VertexId d(std::size_t i) const { return static_cast<VertexId>(3 * r + i); }
};

// Shared body of the three single-failure gadgets; `matching` and `heavy` are the two edge weights.
GadgetInstance single_failure_gadget(const BitMatrix& x, std::size_t extra, bool weighted, double matching,
                                     double heavy, Distance threshold) {
    if (x.rows != x.cols) throw PreconditionError("payload matrix must be square");
    const std::size_t r = x.rows;
    if (r < 2) throw PreconditionError("payload matrix must be at least 2x2");
    const LbLayout at{r};
    std::vector<Edge> edges;
    for (std::size_t block = 0; block < 4; ++block)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                edges.push_back({static_cast<VertexId>(block * r + i), static_cast<VertexId>(block * r + j), heavy});
    for (std::size_t i = 0; i < r; ++i) {
        edges.push_back({at.a(i), at.b(i), matching});
        edges.push_back({at.b(i), at.c(i), matching});
        edges.push_back({at.a(i), at.c(i), matching});
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) edges.push_back({at.b(i), at.d(j), heavy});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (x.at(i, j)) edges.push_back({at.c(i), at.d(j), heavy});
    for (std::size_t q = 0; q < extra; ++q) {
        const auto v = static_cast<VertexId>(4 * r + q);
        edges.push_back({v, at.a(0), matching});
        edges.push_back({v, at.b(0), matching});
        edges.push_back({v, at.c(0), matching});
    }

    GadgetInstance out;
    out.graph = Graph::build(4 * r + extra, false, std::move(edges), weighted);
    out.payload = x.bits;
    out.layout = {{"A", at.a(0), r}, {"B", at.b(0), r}, {"C", at.c(0), r}, {"D", at.d(0), r}};
    if (extra > 0) out.layout.push_back({"R", static_cast<VertexId>(4 * r), extra});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            out.queries.push_back({FailureSet(out.graph, {{at.b(i), at.d(j)}}), i * r + j, threshold});
    return out;
}

}  // namespace

GadgetInstance gen_dense_lb(const BitMatrix& x) {
    GadgetInstance out = single_failure_gadget(x, 0, false, 1.0, 1.0, Distance(2.0));
    out.generator = "dense-lb";
    out.params = {{"r", std::to_string(x.rows)}};
    return out;
}

GadgetInstance gen_sparse_lb(const BitMatrix& x, std::size_t n) {
    if (n < 4 * x.rows + 1) throw PreconditionError("sparse gadget needs n >= 4r + 1");
    GadgetInstance out = single_failure_gadget(x, n - 4 * x.rows, false, 1.0, 1.0, Distance(2.0));
    out.generator = "sparse-lb";
    out.params = {{"r", std::to_string(x.rows)}, {"n", std::to_string(n)}};
    return out;
}

GadgetInstance gen_weighted_lb(const BitMatrix& x, std::uint64_t num, std::uint64_t den, std::size_t extra) {
    if (num == 0 || den == 0 || num > den) throw PreconditionError("eps' = num/den must satisfy 0 < eps' <= 1");
    const auto light = static_cast<double>(num);
    const auto heavy = 2.0 * static_cast<double>(den);
    GadgetInstance out = single_failure_gadget(x, extra, true, light, heavy, Distance(heavy + light));
    out.generator = "weighted-lb";
    out.params = {{"r", std::to_string(x.rows)},
                  {"eps", std::to_string(num) + "/" + std::to_string(den)},
                  {"scale", std::to_string(den)},
                  {"extra", std::to_string(extra)}};
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> multi_lb_pairs(std::size_t f, std::size_t count) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count && j - i <= f / 2; ++j) pairs.emplace_back(i, j);
    return pairs;
}

GadgetInstance gen_multi_lb(std::size_t f, std::size_t k, std::size_t n, const std::vector<std::uint8_t>& keep) {
    if (f < 2 || f % 2 != 0) throw PreconditionError("multi-failure gadget needs an even f >= 2");
    if (k < 1 || f * k + 1 > n) throw PreconditionError("multi-failure gadget needs k >= 1 and fk + 1 <= n");
    const std::size_t count = f * k;
    const auto pairs = multi_lb_pairs(f, count);
    if (keep.size() != pairs.size())
        throw PreconditionError("expected " + std::to_string(pairs.size()) + " payload bits");
    const auto center = static_cast<VertexId>(n - 1);

    std::vector<Edge> edges;
    for (VertexId u = 0; u < center; ++u) edges.push_back({u, center});
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (keep[p])
            edges.push_back({static_cast<VertexId>(pairs[p].first), static_cast<VertexId>(pairs[p].second)});

    GadgetInstance out;
    out.generator = "multi-lb";
    out.graph = Graph::build(n, false, std::move(edges));
    out.payload = keep;
    out.layout = {{"V", 0, count}};
    if (n - count - 1 > 0) out.layout.push_back({"aux", static_cast<VertexId>(count), n - count - 1});
    out.layout.push_back({"c", center, 1});
    out.params = {{"f", std::to_string(f)}, {"k", std::to_string(k)}, {"n", std::to_string(n)}};

    const std::size_t half = f / 2;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        std::vector<VertexPair> failed{{static_cast<VertexId>(i), center}};
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(count - 1, i + half);
        for (std::size_t other = lo; other <= hi; ++other)
            if (other != i && other != j) failed.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(other));
        out.queries.push_back(
            {FailureSet(out.graph, std::move(failed)), p, Distance(std::numeric_limits<double>::max())});
    }
    return out;
}

GadgetInstance gen_multi_lb_f1(std::size_t n, const std::vector<std::uint8_t>& keep) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("path gadget needs an even n >= 4");
    const std::size_t half = n / 2;
    if (keep.size() != half - 1) throw PreconditionError("expected " + std::to_string(half - 1) + " payload bits");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < half; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    for (std::size_t i = 0; i < half; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(half + i)});
    for (std::size_t i = 0; i + 1 < half; ++i)
        if (keep[i]) edges.push_back({static_cast<VertexId>(half + i), static_cast<VertexId>(half + i + 1)});

    GadgetInstance out;
    out.generator = "multi-lb-f1";
    out.graph = Graph::build(n, false, std::move(edges));
    out.payload = keep;
    out.layout = {{"P1", 0, half}, {"P2", static_cast<VertexId>(half), half}};
    out.params = {{"n", std::to_string(n)}};
    for (std::size_t i = 0; i + 1 < half; ++i)
        out.queries.push_back({FailureSet(out.graph, {{static_cast<VertexId>(i), static_cast<VertexId>(i + 1)}}), i,
                               Distance(std::numeric_limits<double>::max())});
    return out;
}

void write_manifest(std::ostream& out, const GadgetInstance& gadget) {
    nlohmann::ordered_json j;
    j["generator"] = gadget.generator;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : gadget.params) params[k] = v;
    j["params"] = params;
    j["n"] = gadget.graph.n();
    j["m"] = gadget.graph.m();
    j["layout"] = nlohmann::ordered_json::array();
    for (const auto& block : gadget.layout)
        j["layout"].push_back({{"block", block.name}, {"first", block.first}, {"size", block.size}});
    std::string payload;
    for (auto b : gadget.payload) payload += b ? '1' : '0';
    j["payload"] = payload;
    j["decode"] = nlohmann::ordered_json::array();
    for (const DecodeQuery& q : gadget.queries) {
        const bool finite_only = q.threshold.value() == std::numeric_limits<double>::max();
        j["decode"].push_back({{"failures", q.failures.to_string()},
                               {"bit", q.bit},
                               {"one_if", finite_only ? std::string("finite") : "<=" + q.threshold.to_string()}});
    }
    out << j.dump(2) << '\n';
}

std::string_view random_kind_name(RandomKind kind) {
    switch (kind) {
        case RandomKind::ErUndirected: return "er-undirected";
        case RandomKind::ErDigraph: return "er-strongly-connected-digraph";
        case RandomKind::ErWeighted: return "er-weighted";
        case RandomKind::LowDiamHub: return "low-diam-hub";
    }
    return "?";
}

std::optional<RandomKind> parse_random_kind(std::string_view name) {
    for (RandomKind k : {RandomKind::ErUndirected, RandomKind::ErDigraph, RandomKind::ErWeighted,
                         RandomKind::LowDiamHub})
        if (random_kind_name(k) == name) return k;
    return std::nullopt;
}

Graph gen_random(RandomKind kind, const RandomParams& params) {
    const std::size_t n = params.n;
    if (n < 2) throw PreconditionError("random graphs need n >= 2");
    if (!(params.p >= 0 && params.p <= 1)) throw PreconditionError("edge probability must lie in [0, 1]");
    if (kind == RandomKind::ErWeighted && params.max_weight < 1) throw PreconditionError("max weight must be >= 1");
    const bool directed = kind == RandomKind::ErDigraph;

    for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        Rng rng = Rng::stream(params.seed, attempt, static_cast<std::uint64_t>(kind) + 1);
        std::vector<Edge> edges;
        std::vector<char> present(n * n, 0);
        auto add = [&](VertexId u, VertexId v, double w) {
            if (present[u * n + v]) return;
            present[u * n + v] = 1;
            if (!directed) present[v * n + u] = 1;
            edges.push_back({u, v, w});
        };
        if (kind == RandomKind::ErDigraph && params.backbone) {
            std::vector<VertexId> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);
            for (std::size_t i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n], 1.0);
        }
        if (kind == RandomKind::LowDiamHub)
            for (VertexId v = 1; v < n; ++v) add(0, v, 1.0);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = directed ? 0 : u + 1; v < n; ++v) {
                if (u == v || (kind == RandomKind::LowDiamHub && u == 0)) continue;
                const bool take = rng.bernoulli(params.p);
                const double w = kind == RandomKind::ErWeighted
                                     ? static_cast<double>(rng.between(1, params.max_weight))
                                     : 1.0;
                if (take) add(u, v, w);
            }
        }
        if (params.max_edges && edges.size() > params.max_edges) continue;
        Graph g = Graph::build(n, directed, std::move(edges), kind == RandomKind::ErWeighted);
        if (is_connected(g)) return g;
    }
    throw PreconditionError("no " + std::string(random_kind_name(kind)) + " sample within " +
                            std::to_string(params.max_attempts) + " attempts");
}

}  // namespace fdo
