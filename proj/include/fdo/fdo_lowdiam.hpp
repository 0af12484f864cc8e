#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fdo/dso.hpp"
#include "fdo/oracle.hpp"

namespace fdo {

/// Sorted, duplicate-free edge ids naming a failure subset.
using SubsetKey = std::vector<EdgeId>;

struct SubsetKeyHash {
    std::size_t operator()(const SubsetKey& key) const noexcept;
};

/// Hyphen-joined ids, "-" for the empty key.
std::string format_key(const SubsetKey& key);
SubsetKey parse_key(std::string_view text, std::size_t m);

enum class DsoBackend { Auto, Exact, Sampled };

std::string_view backend_name(DsoBackend backend);
std::optional<DsoBackend> parse_backend(std::string_view name);

struct LowDiamParams {
    std::size_t f = 2;
    double delta = 1.0;
    DsoBackend backend = DsoBackend::Auto;
    /// Auto picks the exact f-DSO up to this many vertices.
    std::size_t exact_threshold = 64;
    /// Settings of the sampled backend; f and delta are taken from above.
    double c = 3.0;
    std::uint64_t seed = 1;
    std::size_t max_entries = std::size_t{1} << 28;
    /// Expand every recursion-tree node, even when the same key was already expanded for the pair.
    bool audit = false;
};

struct LowDiamStats {
    std::size_t pairs = 0;
    std::size_t nodes = 0;
    std::size_t suppressed = 0;
    std::size_t max_fanout = 0;
    std::size_t subgraphs = 0;  // k of the sampled backend, 0 otherwise
};

/// Exact f-FDO for undirected unweighted graphs of small diameter.
///
/// For every pair s < t a recursion tree over failure subsets is walked: the
/// node F' asks the f-DSO for a replacement path in G - F', records its length
/// in H[F'] (maxed over all pairs), and unless |F'| = f or s,t are cut spawns
/// F' + {e} for each edge e of that path. A query maxes H over the subsets of F.
/// With the exact f-DSO the answers are exact; with the sampled one they never
/// underestimate and are exact with high probability.
class LowDiamFDO final : public DiameterOracle {
public:
    /// Requires diam(G) <= n^(delta/f) / (f+1) for f >= 2. For f = 1 the table
    /// is copied from ExactFDO and delta is not checked.
    static LowDiamFDO build(const Graph& g, const LowDiamParams& params);
    static std::unique_ptr<LowDiamFDO> load(const OracleHeader& header, std::span<const std::string> lines,
                                            const Graph& g);

    OracleKind kind() const override { return OracleKind::LowDiam; }
    std::size_t max_failures() const override { return f_; }
    Distance query(const FailureSet& failures) const override;
    /// Same as query; `probes` receives the number of map lookups made.
    Distance query(const FailureSet& failures, std::size_t& probes) const;
    std::size_t stored_entries() const override { return table_.size(); }
    void serialize(std::ostream& out) const override;

    std::size_t f() const { return f_; }
    double delta() const { return delta_; }
    /// Backend actually used: Exact or Sampled (Auto never appears here).
    DsoBackend backend() const { return backend_; }
    std::uint64_t seed() const { return seed_; }
    double c() const { return c_; }
    Distance base_diameter() const { return base_; }
    const LowDiamStats& stats() const { return stats_; }
    std::optional<Distance> entry(const SubsetKey& key) const;
    const std::unordered_map<SubsetKey, Distance, SubsetKeyHash>& table() const { return table_; }

    /// Largest diameter allowed by the precondition for (n, f, delta).
    static double diameter_limit(std::size_t n, std::size_t f, double delta);

private:
    explicit LowDiamFDO(const Graph& g) : DiameterOracle(g) {}

    std::size_t f_ = 2;
    double delta_ = 1.0;
    DsoBackend backend_ = DsoBackend::Exact;
    std::uint64_t seed_ = 0;
    double c_ = 0.0;
    Distance base_;
    LowDiamStats stats_;
    std::unordered_map<SubsetKey, Distance, SubsetKeyHash> table_;
};

}  // namespace fdo
