#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdo/failure_set.hpp"

namespace fdo {

enum class OracleKind { Exact, Ecc, Spanner, Approx, Multi, LowDiam };

std::string_view kind_name(OracleKind kind);
std::optional<OracleKind> parse_kind(std::string_view name);

/// Common surface of every fault-tolerant diameter oracle.
///
/// An oracle keeps a pointer to the graph it was built on; the graph must
/// outlive it. Queries are const and safe to run concurrently.
class DiameterOracle {
public:
    virtual ~DiameterOracle() = default;

    virtual OracleKind kind() const = 0;
    virtual std::size_t max_failures() const = 0;
    /// Estimate of diam(G - F). Throws QueryError on a failure set the oracle
    /// does not accept (size, or exactly one failure for single-failure oracles).
    virtual Distance query(const FailureSet& failures) const = 0;
    /// Number of stored per-edge / per-key values.
    virtual std::size_t stored_entries() const = 0;
    /// Writes the header line and all entry lines.
    virtual void serialize(std::ostream& out) const = 0;

    const Graph& graph() const { return *graph_; }
    std::string to_string() const;

protected:
    explicit DiameterOracle(const Graph& g) : graph_(&g) {}

private:
    const Graph* graph_;
};

/// Parsed header line: "FDO <kind> <n> <m> key=value ...".
struct OracleHeader {
    OracleKind kind = OracleKind::Exact;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::pair<std::string, std::string>> params;

    const std::string* find(std::string_view key) const;
    /// Throws FormatError when the key is missing.
    const std::string& at(std::string_view key) const;
    double number(std::string_view key) const;
    std::uint64_t integer(std::string_view key) const;
    Distance distance(std::string_view key) const;
};

inline constexpr int kFormatVersion = 1;

/// Writes the header with version and graph fingerprint prepended to `params`.
void write_header(std::ostream& out, OracleKind kind, const Graph& g,
                  const std::vector<std::pair<std::string, std::string>>& params);

/// Reads any serialized oracle, checking its header against `g`.
/// Throws FormatError on malformed text or a graph mismatch.
std::unique_ptr<DiameterOracle> load_oracle(std::istream& in, const Graph& g);
std::unique_ptr<DiameterOracle> load_oracle(std::string_view text, const Graph& g);

/// Shared dispatch for single-failure oracles: exactly one pair, resolved
/// against the graph. Returns the edge id, or nullopt for a non-edge.
std::optional<EdgeId> single_failure(const Graph& g, const FailureSet& failures);

}  // namespace fdo
