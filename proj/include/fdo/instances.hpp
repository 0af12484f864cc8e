#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fdo/failure_set.hpp"

namespace fdo {

/// Row-major binary matrix.
struct BitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits;

    std::uint8_t at(std::size_t i, std::size_t j) const { return bits[i * cols + j]; }
    static BitMatrix random(std::size_t rows, std::size_t cols, std::uint64_t seed);
};

/// One payload bit read back from a diameter: bit = 1 iff answer <= threshold.
struct DecodeQuery {
    FailureSet failures;
    std::size_t bit = 0;
    Distance threshold;
};

struct GadgetInstance {
    std::string generator;
    Graph graph;
    std::vector<std::uint8_t> payload;
    std::vector<DecodeQuery> queries;
    /// Vertex blocks in id order, e.g. {"A", 0, r}.
    struct Block {
        std::string name;
        VertexId first;
        std::size_t size;
    };
    std::vector<Block> layout;
    /// Generator parameters as text, for the manifest.
    std::vector<std::pair<std::string, std::string>> params;
};

/// Decodes every payload bit with `answer` (e.g. brute_diam or an oracle query).
std::vector<std::uint8_t> decode(const GadgetInstance& gadget,
                                 const std::function<Distance(const FailureSet&)>& answer);

/// Dense gadget on 4r vertices. Blocks A, B, C, D of size r at ids 0, r, 2r, 3r
/// are cliques; a_i b_i c_i are triangles; (B, D) is a biclique; {c_i, d_j} is
/// present iff X(i,j) = 1. Failing {b_i, d_j} leaves diameter 2 iff X(i,j) = 1,
/// otherwise 3. Requires a square X with r >= 2.
GadgetInstance gen_dense_lb(const BitMatrix& x);

/// Sparse variant on n >= 4r + 1 vertices: the dense gadget plus a block R of
/// n - 4r vertices, each adjacent to a_1, b_1 and c_1 only.
GadgetInstance gen_sparse_lb(const BitMatrix& x, std::size_t n);

/// Weighted variant for eps' = num/den with 0 < eps' <= 1. Matching edges and
/// edges at R weigh num, all others 2*den (everything scaled by den). The
/// diameter is 2 den + num; failing {b_i, d_j} keeps it iff X(i,j) = 1 and
/// raises it to 4 den + num otherwise. `extra` is the size of R.
GadgetInstance gen_weighted_lb(const BitMatrix& x, std::uint64_t num, std::uint64_t den, std::size_t extra = 0);

/// Pairs {v_i, v_j}, i < j, j - i <= f/2 over v_1..v_count, in the payload order of gen_multi_lb.
std::vector<std::pair<std::size_t, std::size_t>> multi_lb_pairs(std::size_t f, std::size_t count);

/// Multi-failure gadget for even f: v_1..v_{fk} at ids 0..fk-1, n - fk - 1
/// auxiliary vertices next, the center c last. Star edges from c are always
/// present; pair p of multi_lb_pairs is present iff keep[p] = 1. The decode
/// query for {v_i, v_j} fails (E_i minus that pair) plus {c, v_i}; the graph
/// stays connected iff the pair is present.
GadgetInstance gen_multi_lb(std::size_t f, std::size_t k, std::size_t n, const std::vector<std::uint8_t>& keep);

/// Single-failure variant: paths P1 (ids 0..n/2-1) and P2 (ids n/2..n-1) with
/// the matching between them; edge i of P2 is present iff keep[i] = 1. Failing
/// edge i of P1 keeps the graph connected iff that bit is 1.
GadgetInstance gen_multi_lb_f1(std::size_t n, const std::vector<std::uint8_t>& keep);

/// Writes the gadget manifest (see README) as one JSON document.
void write_manifest(std::ostream& out, const GadgetInstance& gadget);

enum class RandomKind { ErUndirected, ErDigraph, ErWeighted, LowDiamHub };

std::string_view random_kind_name(RandomKind kind);
std::optional<RandomKind> parse_random_kind(std::string_view name);

struct RandomParams {
    std::size_t n = 20;
    double p = 0.3;
    std::uint64_t seed = 1;
    /// Weights are uniform in 1..max_weight for er-weighted.
    std::uint32_t max_weight = 10;
    /// er-digraph: add a random Hamiltonian cycle before sampling.
    bool backbone = false;
    /// Reject samples with more edges (0 = no bound).
    std::size_t max_edges = 0;
    std::size_t max_attempts = 1000;
};

/// Seeded random graph, resampled until (strongly) connected. low-diam-hub
/// joins vertex 0 to every other vertex and adds Erdos-Renyi edges among the
/// rest, so the diameter is at most 2. Throws PreconditionError when no sample
/// within max_attempts qualifies.
Graph gen_random(RandomKind kind, const RandomParams& params);

}  // namespace fdo
