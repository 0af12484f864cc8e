#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fdo/oracle.hpp"

namespace fdo {

/// Exact single-failure oracle: diam(G-e) for every edge e.
///
/// Built from one shortest-path tree per source: an edge outside T_v leaves
/// ecc(v) unchanged, so only the n-1 tree edges of each T_v need the DSO.
/// Supports directed graphs and non-negative weights.
class ExactFDO final : public DiameterOracle {
public:
    /// Throws PreconditionError unless g is (strongly) connected.
    static ExactFDO build(const Graph& g);
    static std::unique_ptr<ExactFDO> load(const OracleHeader& header, std::span<const std::string> lines,
                                          const Graph& g);

    OracleKind kind() const override { return OracleKind::Exact; }
    std::size_t max_failures() const override { return 1; }
    Distance query(const FailureSet& failures) const override;
    std::size_t stored_entries() const override { return table_.size(); }
    void serialize(std::ostream& out) const override;

    Distance entry(EdgeId e) const { return table_[e]; }
    std::span<const Distance> entries() const { return table_; }
    Distance base_diameter() const { return base_; }

private:
    ExactFDO(const Graph& g, std::vector<Distance> table, Distance base)
        : DiameterOracle(g), table_(std::move(table)), base_(base) {}

    std::vector<Distance> table_;
    Distance base_;
};

/// Stretch-2 oracle in O(n) space: 2 ecc(s, G-e) for the n-1 edges of one
/// shortest-path tree from s = 0, and 2 ecc(s, G) for every other pair.
/// Undirected graphs with non-negative weights.
class EccFDO final : public DiameterOracle {
public:
    static EccFDO build(const Graph& g);
    static std::unique_ptr<EccFDO> load(const OracleHeader& header, std::span<const std::string> lines,
                                        const Graph& g);

    OracleKind kind() const override { return OracleKind::Ecc; }
    std::size_t max_failures() const override { return 1; }
    Distance query(const FailureSet& failures) const override;
    std::size_t stored_entries() const override { return tree_values_.size(); }
    void serialize(std::ostream& out) const override;

    VertexId source() const { return 0; }
    Distance fallback() const { return fallback_; }
    const std::vector<std::pair<EdgeId, Distance>>& tree_values() const { return tree_values_; }

private:
    EccFDO(const Graph& g, std::vector<std::pair<EdgeId, Distance>> values, Distance fallback)
        : DiameterOracle(g), tree_values_(std::move(values)), fallback_(fallback) {}

    std::vector<std::pair<EdgeId, Distance>> tree_values_;  // sorted by edge id
    Distance fallback_;
};

/// Greedy (2k-1)-spanner H in edge-id order: an edge joins H iff its endpoints
/// are more than 2k-1 apart in the current H. Returns sorted edge ids.
std::vector<EdgeId> greedy_spanner(const Graph& g, int k);

/// Spanner oracle: exact diam(G-e) for spanner edges, diam(G) + 2(k-1)
/// otherwise. Stretch 1 + 2(k-1)/diam(G). Undirected unweighted graphs.
class SpannerFDO final : public DiameterOracle {
public:
    static SpannerFDO build(const Graph& g, int k);
    static std::unique_ptr<SpannerFDO> load(const OracleHeader& header, std::span<const std::string> lines,
                                            const Graph& g);

    OracleKind kind() const override { return OracleKind::Spanner; }
    std::size_t max_failures() const override { return 1; }
    Distance query(const FailureSet& failures) const override;
    std::size_t stored_entries() const override { return values_.size(); }
    void serialize(std::ostream& out) const override;

    int k() const { return k_; }
    Distance base_diameter() const { return base_; }
    Distance fallback() const { return base_ + 2.0 * (k_ - 1); }
    /// (edge id, diam(G-e)) for each spanner edge, sorted by id.
    const std::vector<std::pair<EdgeId, Distance>>& spanner_values() const { return values_; }
    /// Proven stretch bound 1 + 2(k-1)/diam(G).
    double stretch() const { return 1.0 + 2.0 * (k_ - 1) / base_.value(); }

private:
    SpannerFDO(const Graph& g, int k, std::vector<std::pair<EdgeId, Distance>> values, Distance base)
        : DiameterOracle(g), k_(k), values_(std::move(values)), base_(base) {}

    int k_;
    std::vector<std::pair<EdgeId, Distance>> values_;
    Distance base_;
};

enum class PivotMode { Random, Deterministic };
enum class ScanMode { ExactScan, RandomPivots, DeterministicPivots };

std::string_view scan_mode_name(ScanMode mode);

struct ApproxParams {
    double epsilon = 0.5;
    PivotMode pivots = PivotMode::Deterministic;
    std::uint64_t seed = 1;
    /// Sampling constant C of the random pivot probability C ln n / theta.
    double pivot_c = 3.0;
    /// Exact scan is used when theta <= scan_factor * ceil(log2 n).
    double scan_factor = 4.0;
};

/// Random pivots: each vertex independently with probability min(1, C ln n / theta).
std::vector<VertexId> random_pivots(const Graph& g, long theta, double c, std::uint64_t seed);

/// Deterministic pivots hitting, for every vertex s and every edge e whose
/// removal keeps G strongly connected, some vertex x with d(s,x,e) <= theta.
///
/// Let l = min(theta, floor(sqrt n)) and r = 0. The hit paths are the length-l
/// prefixes of in-tree paths toward r: the prefix of s's path in T_in(r) when
/// d(s,r) > l, and for every non-bridge e on the first l edges of that path the
/// prefix of s's path in T_in,e(r) when d(s,r,e) > l. The root is added last,
/// covering every s whose (replacement) distance to r is at most l.
std::vector<VertexId> deterministic_pivots(const Graph& g, long theta);

/// (1+eps)-approximate single-failure oracle for unweighted, strongly
/// connected graphs (directed or undirected).
///
/// With theta = floor(eps * diam(G)) small the table is exact. Otherwise
/// replacement distances are only taken from pivots, and theta is added back:
/// diam(G-e) <= D[e] <= (1+eps) diam(G-e).
class ApproxFDO final : public DiameterOracle {
public:
    static ApproxFDO build(const Graph& g, const ApproxParams& params);
    static std::unique_ptr<ApproxFDO> load(const OracleHeader& header, std::span<const std::string> lines,
                                           const Graph& g);

    OracleKind kind() const override { return OracleKind::Approx; }
    std::size_t max_failures() const override { return 1; }
    Distance query(const FailureSet& failures) const override;
    std::size_t stored_entries() const override { return table_.size(); }
    void serialize(std::ostream& out) const override;

    Distance entry(EdgeId e) const { return table_[e]; }
    std::span<const Distance> entries() const { return table_; }
    Distance base_diameter() const { return base_; }
    double epsilon() const { return epsilon_; }
    long theta() const { return theta_; }
    ScanMode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<VertexId>& pivots() const { return pivots_; }

private:
    ApproxFDO(const Graph& g) : DiameterOracle(g) {}

    std::vector<Distance> table_;
    Distance base_;
    double epsilon_ = 0;
    long theta_ = 0;
    ScanMode mode_ = ScanMode::ExactScan;
    std::uint64_t seed_ = 0;
    std::vector<VertexId> pivots_;
};

}  // namespace fdo
