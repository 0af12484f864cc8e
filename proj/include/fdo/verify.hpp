#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fdo/oracle.hpp"
#include "fdo/shortest_paths.hpp"

namespace fdo {

/// diam(G - F) from scratch; non-edges in F are ignored.
Distance brute_diam(const Graph& g, const FailureSet& failures);
Distance brute_diam(const Graph& g, std::span<const EdgeId> failures);

/// d(s, t, F) from scratch.
Distance brute_replacement(const Graph& g, VertexId s, VertexId t, const FailureSet& failures);
Distance brute_replacement(const Graph& g, VertexId s, VertexId t, std::span<const EdgeId> failures);

struct EnumeratorParams {
    std::size_t min_size = 1;
    std::size_t max_size = 1;
    /// Exhaustive enumeration while sum_j C(m, j) stays within this bound.
    std::size_t exhaustive_limit = 100000;
    /// Number of sampled sets otherwise.
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
};

/// Edge-id subsets with min_size <= |F| <= max_size: all of them in size then
/// lexicographic order when few enough, else `samples` uniformly drawn ones
/// (size uniform in the range, then a uniform subset of that size).
std::vector<std::vector<EdgeId>> enumerate_failures(const Graph& g, const EnumeratorParams& params);

/// True when every set of the given sizes is listed by enumerate_failures.
bool enumeration_is_exhaustive(const Graph& g, const EnumeratorParams& params);

/// truth <= answer <= stretch * truth, with infinity only matching infinity.
bool within_stretch(Distance answer, Distance truth, double stretch);

struct AuditRecord {
    std::string failures;
    Distance answer;
    Distance truth;
    double ratio = 1.0;
    bool violation = false;
};

struct AuditReport {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    double stretch = 1.0;
    std::vector<AuditRecord> records;
    std::size_t violations = 0;
    double max_ratio = 1.0;
    bool exhaustive = false;
    double elapsed_ms = 0.0;

    /// One JSON object per query, then a summary object. Timing goes into a
    /// separate trailing record only when `with_timing` is set.
    void write_jsonl(std::ostream& out, bool with_timing = false) const;
};

/// Compares the oracle against brute_diam on every listed failure set.
AuditReport audit(const DiameterOracle& oracle, std::span<const std::vector<EdgeId>> failure_sets, double stretch);

/// Pairs (s, e) with e not a strong bridge and no pivot x having d(s, x, {e}) <= theta.
struct CoverageGap {
    VertexId s;
    EdgeId e;
};
std::vector<CoverageGap> pivot_coverage_gaps(const Graph& g, std::span<const VertexId> pivots, long theta);

}  // namespace fdo
