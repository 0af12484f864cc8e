#include "fdo/failure_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fdo/error.hpp"

namespace fdo {

FailureSet::FailureSet(const Graph& g, std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {
    for (auto& [u, v] : pairs_) {
        if (u >= g.n() || v >= g.n())
            throw QueryError("vertex id out of range in pair " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw QueryError("pair with equal endpoints " + std::to_string(u) + "-" + std::to_string(v));
        if (!g.directed() && v < u) std::swap(u, v);
    }
    std::vector<VertexPair> sorted(pairs_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw QueryError("duplicate pair in failure set");
}

FailureSet FailureSet::of_edges(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<VertexPair> pairs;
    pairs.reserve(edges.size());
    for (EdgeId e : edges) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
    return FailureSet(g, std::move(pairs));
}

FailureSet FailureSet::parse(const Graph& g, std::string_view line) {
    std::vector<VertexPair> pairs;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        std::string_view token = line.substr(pos, end - pos);
        auto dash = token.find('-');
        VertexId u = 0, v = 0;
        bool ok = dash != std::string_view::npos;
        if (ok) {
            auto a = std::from_chars(token.data(), token.data() + dash, u);
            auto b = std::from_chars(token.data() + dash + 1, token.data() + token.size(), v);
            ok = a.ec == std::errc() && a.ptr == token.data() + dash && b.ec == std::errc() &&
                 b.ptr == token.data() + token.size();
        }
        if (!ok) throw QueryError("malformed pair '" + std::string(token) + "'");
        pairs.emplace_back(u, v);
        pos = end;
    }
    return FailureSet(g, std::move(pairs));
}

FailureSet::Resolved FailureSet::resolve(const Graph& g) const {
    Resolved r;
    for (const auto& [u, v] : pairs_) {
        if (auto e = g.find_edge(u, v))
            r.edges.push_back(*e);
        else
            r.non_edges.emplace_back(u, v);
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

std::string FailureSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) os << ' ';
        os << pairs_[i].first << '-' << pairs_[i].second;
    }
    return os.str();
}

}  // namespace fdo
