#include "fdo/verify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "json.hpp"

#include "fdo/random.hpp"

namespace fdo {

Distance brute_diam(const Graph& g, std::span<const EdgeId> failures) { return diameter(g, failures); }

Distance brute_diam(const Graph& g, const FailureSet& failures) {
    return brute_diam(g, failures.resolve(g).edges);
}

Distance brute_replacement(const Graph& g, VertexId s, VertexId t, std::span<const EdgeId> failures) {
    return sssp(g, s, failures).dist(t);
}

Distance brute_replacement(const Graph& g, VertexId s, VertexId t, const FailureSet& failures) {
    return brute_replacement(g, s, t, failures.resolve(g).edges);
}

namespace {

// sum_{j=lo..hi} C(m, j), saturating just above `cap`.
std::size_t subset_count(std::size_t m, std::size_t lo, std::size_t hi, std::size_t cap) {
    std::size_t total = 0;
    for (std::size_t j = lo; j <= hi && j <= m; ++j) {
        double c = 1.0;
        for (std::size_t i = 0; i < j; ++i) c = c * static_cast<double>(m - i) / static_cast<double>(i + 1);
        if (c > static_cast<double>(cap)) return cap + 1;
        total += static_cast<std::size_t>(std::llround(c));
        if (total > cap) return cap + 1;
    }
    return total;
}

}  // namespace

bool enumeration_is_exhaustive(const Graph& g, const EnumeratorParams& params) {
    return subset_count(g.m(), params.min_size, params.max_size, params.exhaustive_limit) <= params.exhaustive_limit;
}

std::vector<std::vector<EdgeId>> enumerate_failures(const Graph& g, const EnumeratorParams& params) {
    const std::size_t m = g.m();
    std::vector<std::vector<EdgeId>> out;
    if (enumeration_is_exhaustive(g, params)) {
        for (std::size_t j = params.min_size; j <= params.max_size && j <= m; ++j) {
            std::vector<EdgeId> pick(j);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                out.push_back(pick);
                std::size_t i = j;
                while (i > 0 && pick[i - 1] == m - j + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t k = i; k < j; ++k) pick[k] = pick[k - 1] + 1;
            }
        }
        return out;
    }
    Rng rng = Rng::stream(params.seed, 0, /*tag=*/0xF5E7);
    std::vector<EdgeId> ids(m);
    const std::size_t hi = std::min(params.max_size, m);
    for (std::size_t sample = 0; sample < params.samples; ++sample) {
        const std::size_t j = rng.between(params.min_size, hi);
        std::iota(ids.begin(), ids.end(), 0);
        for (std::size_t i = 0; i < j; ++i) std::swap(ids[i], ids[rng.between(i, m - 1)]);
        std::vector<EdgeId> pick(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(j));
        std::sort(pick.begin(), pick.end());
        out.push_back(std::move(pick));
    }
    return out;
}

bool within_stretch(Distance answer, Distance truth, double stretch) {
    if (truth.is_infinite() || answer.is_infinite()) return truth.is_infinite() && answer.is_infinite();
    const double tol = kWeightTolerance * std::max(1.0, truth.value());
    return answer.value() >= truth.value() - tol && answer.value() <= stretch * truth.value() + tol;
}

AuditReport audit(const DiameterOracle& oracle, std::span<const std::vector<EdgeId>> failure_sets, double stretch) {
    const auto start = std::chrono::steady_clock::now();
    const Graph& g = oracle.graph();
    AuditReport report;
    report.kind = std::string(kind_name(oracle.kind()));
    report.stretch = stretch;
    for (const auto& edges : failure_sets) {
        const FailureSet failures = FailureSet::of_edges(g, edges);
        AuditRecord r;
        r.failures = failures.to_string();
        r.answer = oracle.query(failures);
        r.truth = brute_diam(g, edges);
        if (r.truth.is_infinite() || r.answer.is_infinite())
            r.ratio = r.truth == r.answer ? 1.0 : std::numeric_limits<double>::infinity();
        else
            r.ratio = r.truth.value() > 0 ? r.answer.value() / r.truth.value() : 1.0;
        r.violation = !within_stretch(r.answer, r.truth, stretch);
        if (r.violation) ++report.violations;
        report.max_ratio = std::max(report.max_ratio, r.ratio);
        report.records.push_back(std::move(r));
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

nlohmann::json number_or_inf(double x) {
    if (std::isinf(x)) return "inf";
    return x;
}

}  // namespace

void AuditReport::write_jsonl(std::ostream& out, bool with_timing) const {
    for (const AuditRecord& r : records) {
        nlohmann::ordered_json j;
        j["record"] = "query";
        j["failures"] = r.failures;
        j["answer"] = r.answer.to_string();
        j["truth"] = r.truth.to_string();
        j["ratio"] = number_or_inf(r.ratio);
        j["violation"] = r.violation;
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json s;
    s["record"] = "summary";
    s["kind"] = kind;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    s["params"] = p;
    s["stretch"] = stretch;
    s["queries"] = records.size();
    s["violations"] = violations;
    s["max_ratio"] = number_or_inf(max_ratio);
    s["exhaustive"] = exhaustive;
    out << s.dump() << '\n';
    if (with_timing) {
        nlohmann::ordered_json t;
        t["record"] = "timing";
        t["elapsed_ms"] = elapsed_ms;
        out << t.dump() << '\n';
    }
}

std::vector<CoverageGap> pivot_coverage_gaps(const Graph& g, std::span<const VertexId> pivots, long theta) {
    std::vector<CoverageGap> gaps;
    const Distance limit(static_cast<double>(theta));
    std::vector<char> bridge(g.m(), 0);
    for (EdgeId e : strong_bridges(g)) bridge[e] = 1;
    std::vector<char> covered(g.n());
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (bridge[e]) continue;
        std::fill(covered.begin(), covered.end(), 0);
        const EdgeId failed[] = {e};
        for (VertexId x : pivots) {
            const ShortestPathTree into = in_tree(g, x, failed);
            for (VertexId s = 0; s < g.n(); ++s)
                if (into.dist(s) <= limit) covered[s] = 1;
        }
        for (VertexId s = 0; s < g.n(); ++s)
            if (!covered[s]) gaps.push_back({s, e});
    }
    return gaps;
}

}  // namespace fdo
