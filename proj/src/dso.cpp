#include "fdo/dso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fdo/error.hpp"
#include "fdo/random.hpp"

namespace fdo {

SingleDSO::SingleDSO(const Graph& g) : SingleDSO(g, AllPairs(g)) {}

SingleDSO::SingleDSO(const Graph& g, AllPairs base) : g_(&g), base_(std::move(base)) {}

std::shared_ptr<const ShortestPathTree> SingleDSO::replacement_tree(VertexId s, EdgeId e) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(s) << 32) | e;
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const EdgeId failed[] = {e};
    auto tree = std::make_shared<const ShortestPathTree>(sssp(*g_, s, failed));
    std::lock_guard lock(mu_);
    ++misses_;
    return cache_.try_emplace(key, std::move(tree)).first->second;
}

Distance SingleDSO::query(VertexId s, VertexId t, EdgeId e) const {
    const ShortestPathTree& tree = base_.tree(s);
    if (!tree.path_contains(t, e)) return tree.dist(t);
    return replacement_tree(s, e)->dist(t);
}

void SingleDSO::evict(VertexId s) const {
    std::lock_guard lock(mu_);
    std::erase_if(cache_, [s](const auto& kv) { return (kv.first >> 32) == s; });
}

std::size_t SingleDSO::cached_trees() const {
    std::lock_guard lock(mu_);
    return cache_.size();
}

std::size_t SingleDSO::recomputations() const {
    std::lock_guard lock(mu_);
    return misses_;
}

DsoAnswer ExactFDSO::query(VertexId s, VertexId t, std::span<const EdgeId> failures) const {
    if (failures.size() > f_) throw QueryError("too many failures");
    std::vector<EdgeId> key(failures.begin(), failures.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());

    std::shared_ptr<const ShortestPathTree> tree;
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find({s, key}); it != cache_.end()) tree = it->second;
    }
    if (!tree) {
        tree = std::make_shared<const ShortestPathTree>(sssp(*g_, s, key));
        std::lock_guard lock(mu_);
        tree = cache_.try_emplace({s, std::move(key)}, std::move(tree)).first->second;
    }
    DsoAnswer answer;
    answer.dist = tree->dist(t);
    answer.path = tree->path(t);
    return answer;
}

std::size_t ExactFDSO::cached_trees() const {
    std::lock_guard lock(mu_);
    return cache_.size();
}

void ExactFDSO::clear() const {
    std::lock_guard lock(mu_);
    cache_.clear();
}

std::size_t sampled_subgraph_count(std::size_t n, std::size_t f, double delta, double c) {
    if (n < 2) return 1;
    const double k = std::ceil(c * static_cast<double>(f) * std::pow(static_cast<double>(n), delta) *
                               std::log(static_cast<double>(n)));
    return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

SampledFDSO::SampledFDSO(const Graph& g, const SampledDsoParams& params) : g_(&g), params_(params) {
    if (g.directed() || g.weighted()) throw PreconditionError("sampled f-DSO requires an undirected unweighted graph");
    if (params.f < 1) throw PreconditionError("sampled f-DSO requires f >= 1");
    if (!(params.delta > 0)) throw PreconditionError("sampled f-DSO requires delta > 0");
    if (!(params.c > 0)) throw PreconditionError("sampled f-DSO requires C > 0");

    const std::size_t n = g.n();
    const std::size_t k = sampled_subgraph_count(n, params.f, params.delta, params.c);
    const double entries = static_cast<double>(k) * static_cast<double>(n) * static_cast<double>(n);
    if (entries > static_cast<double>(params.max_entries))
        throw PreconditionError("sampled f-DSO needs k = " + std::to_string(k) + " subgraphs (" +
                                std::to_string(static_cast<unsigned long long>(entries)) +
                                " stored distances), over the memory budget");

    exclusion_p_ = n < 2 ? 0.0 : std::pow(static_cast<double>(n), -params.delta / static_cast<double>(params.f));
    s_e_.assign(g.m(), {});
    excluded_.reserve(k);
    subgraphs_.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng = Rng::stream(params.seed, i);
        EdgeSet mask(g.m());
        for (EdgeId e = 0; e < g.m(); ++e) {
            if (rng.uniform() < exclusion_p_) {
                mask.insert(e);
                s_e_[e].push_back(static_cast<std::uint32_t>(i));
            }
        }
        subgraphs_.emplace_back(g, mask);
        excluded_.push_back(std::move(mask));
    }
}

std::vector<std::uint32_t> SampledFDSO::intersect(std::span<const EdgeId> failures) const {
    std::vector<std::uint32_t> result;
    if (failures.empty()) {
        result.resize(subgraphs_.size());
        std::iota(result.begin(), result.end(), 0u);
        return result;
    }
    std::vector<EdgeId> order(failures.begin(), failures.end());
    std::sort(order.begin(), order.end(),
              [this](EdgeId a, EdgeId b) { return s_e_[a].size() < s_e_[b].size(); });
    result = s_e_[order[0]];
    std::vector<std::uint32_t> next;
    for (std::size_t j = 1; j < order.size() && !result.empty(); ++j) {
        const auto& other = s_e_[order[j]];
        next.clear();
        // walk the smaller list and binary-search the larger one
        for (std::uint32_t i : result)
            if (std::binary_search(other.begin(), other.end(), i)) next.push_back(i);
        result.swap(next);
    }
    return result;
}

DsoAnswer SampledFDSO::query(VertexId s, VertexId t, std::span<const EdgeId> failures) const {
    if (failures.size() > params_.f) throw QueryError("too many failures");
    for (EdgeId e : failures)
        if (e >= g_->m()) throw QueryError("failure is not an edge id");

    DsoAnswer answer;
    std::optional<std::uint32_t> best;
    for (std::uint32_t i : intersect(failures)) {
        Distance d = subgraphs_[i].dist(s, t);
        if (d < answer.dist) {
            answer.dist = d;
            best = i;
        }
    }
    if (best) answer.path = subgraphs_[*best].tree(s).path(t);
    return answer;
}

}  // namespace fdo
