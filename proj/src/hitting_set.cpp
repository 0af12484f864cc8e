#include "fdo/hitting_set.hpp"

#include <algorithm>
#include <set>

namespace fdo {

std::vector<VertexId> greedy_hitting_set(std::size_t universe, std::span<const std::vector<VertexId>> sets) {
    std::vector<std::vector<std::uint32_t>> occurs(universe);
    for (std::uint32_t i = 0; i < sets.size(); ++i)
        for (VertexId v : sets[i]) occurs[v].push_back(i);

    std::vector<std::size_t> count(universe);
    std::size_t top = 0;
    for (VertexId v = 0; v < universe; ++v) {
        count[v] = occurs[v].size();
        top = std::max(top, count[v]);
    }
    std::vector<std::set<VertexId>> bucket(top + 1);
    for (VertexId v = 0; v < universe; ++v)
        if (count[v] > 0) bucket[count[v]].insert(v);

    std::vector<char> hit(sets.size(), 0);
    std::vector<VertexId> chosen;
    while (top > 0) {
        if (bucket[top].empty()) {
            --top;
            continue;
        }
        const VertexId v = *bucket[top].begin();
        chosen.push_back(v);
        for (std::uint32_t i : occurs[v]) {
            if (hit[i]) continue;
            hit[i] = 1;
            for (VertexId u : sets[i]) {
                bucket[count[u]].erase(u);
                if (--count[u] > 0) bucket[count[u]].insert(u);
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace fdo
