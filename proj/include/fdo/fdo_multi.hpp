#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdo/oracle.hpp"
#include "fdo/shortest_paths.hpp"

namespace fdo {

/// Per-query intermediate values of MultiFDO.
struct MultiExplain {
    /// Failed tree edges e_1..e_k ordered by the Euler index of their lower endpoint.
    std::vector<EdgeId> failed_tree;
    /// r_0 = s, then the lower endpoint r_i of each failed tree edge.
    std::vector<VertexId> roots;
    /// Swap edges E_F: a minimum spanning forest completion of T - F_T.
    std::vector<EdgeId> swap_edges;
    /// Parent edge of component i in T' (index 0 unused).
    std::vector<std::optional<EdgeId>> parent_edge;
    bool connected = true;
    double delta = 0.0;
    /// w'-weight of (T - F_T) + E_F.
    double forest_weight = 0.0;
    Distance answer;
};

/// (f+2)-approximate f-FDO for undirected graphs with non-negative weights.
///
/// Keeps one shortest-path tree T from s = 0 and re-weights every edge by
/// w'(x,y) = d(s,x) + w + d(s,y) (0 on T). For a query F the components of
/// T - F are reconnected by a minimum spanning forest under w', and the
/// answer is f*Delta + 2*ecc(s) with Delta = max_i w'(e_i) - d(s,r_i).
class MultiFDO final : public DiameterOracle {
public:
    /// `tight` replaces the multiplier f by the number k of failed tree edges.
    static MultiFDO build(const Graph& g, std::size_t f, bool tight = false);
    static std::unique_ptr<MultiFDO> load(const OracleHeader& header, std::span<const std::string> lines,
                                          const Graph& g);

    OracleKind kind() const override { return OracleKind::Multi; }
    std::size_t max_failures() const override { return f_; }
    Distance query(const FailureSet& failures) const override;
    /// Tree parent links plus, for f = 1, one swap edge per tree edge.
    std::size_t stored_entries() const override;
    void serialize(std::ostream& out) const override;

    /// Full computation, always by the general path (never the f = 1 table).
    MultiExplain explain(const FailureSet& failures) const;

    std::size_t f() const { return f_; }
    bool tight() const { return tight_; }
    VertexId source() const { return 0; }
    const ShortestPathTree& tree() const { return tree_; }
    bool in_tree(EdgeId e) const { return in_tree_[e] != 0; }
    double wprime(EdgeId e) const { return wprime_[e]; }
    Distance maxdist() const { return maxdist_; }
    /// For f = 1: minimum-w' non-tree edge covering tree edge e (smallest id on ties).
    std::optional<EdgeId> swap_edge(EdgeId e) const;

private:
    explicit MultiFDO(const Graph& g) : DiameterOracle(g) {}
    void index_tree();
    void compute_swaps();
    std::vector<EdgeId> check_and_resolve(const FailureSet& failures) const;
    Distance combine(double delta, std::size_t k) const;

    std::size_t f_ = 1;
    bool tight_ = false;
    ShortestPathTree tree_;
    std::vector<std::uint8_t> in_tree_;
    std::vector<double> wprime_;
    Distance maxdist_;
    std::vector<std::uint32_t> tin_, tout_;
    std::vector<std::optional<EdgeId>> swap_;  // indexed by edge id, tree edges only
};

}  // namespace fdo
