#include "fdo/fdo_lowdiam.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

#include "fdo/error.hpp"
#include "fdo/fdo_single.hpp"
#include "serialize_util.hpp"

namespace fdo {

std::size_t SubsetKeyHash::operator()(const SubsetKey& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ key.size();
    for (EdgeId e : key) {
        h ^= e;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::string format_key(const SubsetKey& key) { return format_id_list(key, '-'); }

SubsetKey parse_key(std::string_view text, std::size_t m) {
    if (text == "-") return {};
    SubsetKey key;
    std::size_t start = 0;
    while (true) {
        const std::size_t dash = text.find('-', start);
        const auto id = parse_unsigned(text.substr(start, dash - start));
        if (id >= m) throw FormatError("edge id " + std::to_string(id) + " out of range");
        key.push_back(static_cast<EdgeId>(id));
        if (dash == std::string_view::npos) break;
        start = dash + 1;
    }
    if (!std::is_sorted(key.begin(), key.end()) || std::adjacent_find(key.begin(), key.end()) != key.end())
        throw FormatError("subset key '" + std::string(text) + "' is not strictly ascending");
    return key;
}

std::string_view backend_name(DsoBackend backend) {
    switch (backend) {
        case DsoBackend::Auto: return "auto";
        case DsoBackend::Exact: return "exact";
        case DsoBackend::Sampled: return "sampled";
    }
    return "?";
}

std::optional<DsoBackend> parse_backend(std::string_view name) {
    if (name == "auto") return DsoBackend::Auto;
    if (name == "exact") return DsoBackend::Exact;
    if (name == "sampled") return DsoBackend::Sampled;
    return std::nullopt;
}

double LowDiamFDO::diameter_limit(std::size_t n, std::size_t f, double delta) {
    return std::pow(static_cast<double>(n), delta / static_cast<double>(f)) / static_cast<double>(f + 1);
}

LowDiamFDO LowDiamFDO::build(const Graph& g, const LowDiamParams& params) {
    if (g.directed() || g.weighted())
        throw PreconditionError("low-diameter FDO requires an undirected unweighted graph");
    if (params.f < 1) throw PreconditionError("low-diameter FDO requires f >= 1");
    if (!(params.delta > 0)) throw PreconditionError("low-diameter FDO requires delta > 0");
    if (g.n() == 0 || !is_connected(g)) throw PreconditionError("low-diameter FDO requires a connected graph");

    LowDiamFDO o(g);
    o.f_ = params.f;
    o.delta_ = params.delta;

    if (params.f == 1) {
        const ExactFDO exact = ExactFDO::build(g);
        o.backend_ = DsoBackend::Exact;
        o.base_ = exact.base_diameter();
        o.table_.emplace(SubsetKey{}, o.base_);
        for (EdgeId e = 0; e < g.m(); ++e) o.table_.emplace(SubsetKey{e}, exact.entry(e));
        return o;
    }

    o.base_ = diameter(g);
    const double limit = diameter_limit(g.n(), params.f, params.delta);
    if (o.base_.value() > limit)
        throw PreconditionError("diameter " + o.base_.to_string() + " exceeds n^(delta/f)/(f+1) = " +
                                format_number(limit));

    o.backend_ = params.backend;
    if (o.backend_ == DsoBackend::Auto)
        o.backend_ = g.n() <= params.exact_threshold ? DsoBackend::Exact : DsoBackend::Sampled;

    std::unique_ptr<PathReportingDSO> dso;
    const ExactFDSO* exact = nullptr;
    if (o.backend_ == DsoBackend::Exact) {
        auto owned = std::make_unique<ExactFDSO>(g, params.f);
        exact = owned.get();
        dso = std::move(owned);
    } else {
        SampledDsoParams sp;
        sp.f = params.f;
        sp.delta = params.delta;
        sp.c = params.c;
        sp.seed = params.seed;
        sp.max_entries = params.max_entries;
        auto sampled = std::make_unique<SampledFDSO>(g, sp);
        o.stats_.subgraphs = sampled->k();
        o.seed_ = params.seed;
        o.c_ = params.c;
        dso = std::move(sampled);
    }

    std::unordered_set<SubsetKey, SubsetKeyHash> expanded;
    std::vector<SubsetKey> stack;
    for (VertexId s = 0; s < g.n(); ++s) {
        for (VertexId t = s + 1; t < g.n(); ++t) {
            ++o.stats_.pairs;
            expanded.clear();
            stack.assign(1, SubsetKey{});
            while (!stack.empty()) {
                SubsetKey key = std::move(stack.back());
                stack.pop_back();
                const DsoAnswer answer = dso->query(s, t, key);
                ++o.stats_.nodes;
                auto [it, inserted] = o.table_.try_emplace(key, answer.dist);
                if (!inserted) it->second = max(it->second, answer.dist);
                if (key.size() == params.f || !answer.path) continue;
                o.stats_.max_fanout = std::max(o.stats_.max_fanout, answer.path->edges.size());
                for (EdgeId e : answer.path->edges) {
                    SubsetKey child = key;
                    child.insert(std::upper_bound(child.begin(), child.end(), e), e);
                    if (!params.audit && !expanded.insert(child).second) {
                        ++o.stats_.suppressed;
                        continue;
                    }
                    stack.push_back(std::move(child));
                }
            }
        }
        if (exact) exact->clear();
    }
    return o;
}

std::optional<Distance> LowDiamFDO::entry(const SubsetKey& key) const {
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

Distance LowDiamFDO::query(const FailureSet& failures) const {
    std::size_t probes = 0;
    return query(failures, probes);
}

Distance LowDiamFDO::query(const FailureSet& failures, std::size_t& probes) const {
    if (failures.size() > f_) throw QueryError("too many failures");
    const std::vector<EdgeId> edges = failures.resolve(graph()).edges;
    probes = 0;
    Distance best = Distance::zero();
    SubsetKey key;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        key.clear();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1) key.push_back(edges[i]);
        ++probes;
        if (auto it = table_.find(key); it != table_.end()) best = max(best, it->second);
    }
    return best;
}

void LowDiamFDO::serialize(std::ostream& out) const {
    std::vector<std::pair<SubsetKey, Distance>> entries(table_.begin(), table_.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    write_header(out, kind(), graph(),
                 {{"f", std::to_string(f_)},
                  {"delta", format_number(delta_)},
                  {"backend", std::string(backend_name(backend_))},
                  {"seed", std::to_string(seed_)},
                  {"c", format_number(c_)},
                  {"base_diam", base_.to_string()}});
    for (const auto& [key, d] : entries) out << format_key(key) << ' ' << d.to_string() << '\n';
}

std::unique_ptr<LowDiamFDO> LowDiamFDO::load(const OracleHeader& header, std::span<const std::string> lines,
                                             const Graph& g) {
    std::unique_ptr<LowDiamFDO> o(new LowDiamFDO(g));
    o->f_ = header.integer("f");
    if (o->f_ < 1) throw FormatError("f must be >= 1");
    o->delta_ = header.number("delta");
    auto backend = parse_backend(header.at("backend"));
    if (!backend || *backend == DsoBackend::Auto) throw FormatError("bad backend '" + header.at("backend") + "'");
    o->backend_ = *backend;
    o->seed_ = header.integer("seed");
    o->c_ = header.number("c");
    o->base_ = header.distance("base_diam");
    for (const std::string& line : lines) {
        auto fields = split_fields(line);
        if (fields.size() != 2) throw FormatError("bad entry line '" + line + "'");
        SubsetKey key = parse_key(fields[0], g.m());
        if (key.size() > o->f_) throw FormatError("subset key larger than f");
        auto d = Distance::parse(fields[1]);
        if (!d) throw FormatError("bad distance '" + std::string(fields[1]) + "'");
        if (!o->table_.emplace(std::move(key), *d).second) throw FormatError("repeated subset key");
    }
    if (!o->table_.count(SubsetKey{})) throw FormatError("missing entry for the empty subset");
    return o;
}

}  // namespace fdo
