// Command-line front end for the fault-tolerant diameter oracles.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdo/error.hpp"
#include "fdo/fdo_lowdiam.hpp"
#include "fdo/fdo_multi.hpp"
#include "fdo/fdo_single.hpp"
#include "fdo/graph_io.hpp"
#include "fdo/instances.hpp"
#include "fdo/random.hpp"
#include "fdo/verify.hpp"

using namespace fdo;
using json = nlohmann::ordered_json;

namespace {

struct OracleOptions {
    std::string kind = "exact";
    double epsilon = 0.5;
    int k = 2;
    std::size_t f = 2;
    double delta = 1.0;
    double c = 3.0;
    std::optional<std::uint64_t> seed;
    bool default_seed = false;
    std::string pivots = "deterministic";
    double scan_factor = 4.0;
    bool tight = false;
    std::string backend = "auto";

    void add_to(CLI::App* app) {
        app->add_option("--kind", kind, "exact | ecc | spanner | approx | multi | lowdiam")
            ->check(CLI::IsMember({"exact", "ecc", "spanner", "approx", "multi", "lowdiam"}));
        app->add_option("--epsilon", epsilon, "approx: stretch 1+epsilon")->check(CLI::PositiveNumber);
        app->add_option("--k", k, "spanner: stretch parameter")->check(CLI::PositiveNumber);
        app->add_option("--f", f, "multi/lowdiam: maximum number of failures")->check(CLI::PositiveNumber);
        app->add_option("--delta", delta, "lowdiam: space exponent")->check(CLI::PositiveNumber);
        app->add_option("--c", c, "sampling constant C")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "seed for randomized builds");
        app->add_flag("--default-seed", default_seed, "use the default seed when --seed is absent");
        app->add_option("--pivots", pivots, "approx: deterministic | random")
            ->check(CLI::IsMember({"deterministic", "random"}));
        app->add_option("--scan-factor", scan_factor, "approx: exact scan when theta <= factor * ceil(log2 n)")
            ->check(CLI::NonNegativeNumber);
        app->add_flag("--tight", tight, "multi: multiply Delta by the number of failed tree edges");
        app->add_option("--backend", backend, "lowdiam: auto | exact | sampled")
            ->check(CLI::IsMember({"auto", "exact", "sampled"}));
    }

    bool randomized(const Graph& g) const {
        if (kind == "approx") return pivots == "random";
        if (kind == "lowdiam")
            return f >= 2 && (backend == "sampled" || (backend == "auto" && g.n() > LowDiamParams{}.exact_threshold));
        return false;
    }

    std::uint64_t resolved_seed() const { return seed.value_or(kDefaultSeed); }
};

struct Built {
    std::unique_ptr<DiameterOracle> oracle;
    double build_ms = 0;
};

Built build_oracle(const Graph& g, const OracleOptions& opt) {
    if (opt.randomized(g) && !opt.seed && !opt.default_seed)
        throw PreconditionError("randomized build needs --seed (or --default-seed)");
    const auto start = std::chrono::steady_clock::now();
    Built out;
    if (opt.kind == "exact") {
        out.oracle = std::make_unique<ExactFDO>(ExactFDO::build(g));
    } else if (opt.kind == "ecc") {
        out.oracle = std::make_unique<EccFDO>(EccFDO::build(g));
    } else if (opt.kind == "spanner") {
        out.oracle = std::make_unique<SpannerFDO>(SpannerFDO::build(g, opt.k));
    } else if (opt.kind == "approx") {
        ApproxParams p;
        p.epsilon = opt.epsilon;
        p.pivots = opt.pivots == "random" ? PivotMode::Random : PivotMode::Deterministic;
        p.seed = opt.resolved_seed();
        p.pivot_c = opt.c;
        p.scan_factor = opt.scan_factor;
        out.oracle = std::make_unique<ApproxFDO>(ApproxFDO::build(g, p));
    } else if (opt.kind == "multi") {
        out.oracle = std::make_unique<MultiFDO>(MultiFDO::build(g, opt.f, opt.tight));
    } else {
        LowDiamParams p;
        p.f = opt.f;
        p.delta = opt.delta;
        p.backend = *parse_backend(opt.backend);
        p.c = opt.c;
        p.seed = opt.resolved_seed();
        out.oracle = std::make_unique<LowDiamFDO>(LowDiamFDO::build(g, p));
    }
    out.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

double default_stretch(const DiameterOracle& o) {
    switch (o.kind()) {
        case OracleKind::Exact: return 1.0;
        case OracleKind::Ecc: return 2.0;
        case OracleKind::Spanner: return static_cast<const SpannerFDO&>(o).stretch();
        case OracleKind::Approx: return 1.0 + static_cast<const ApproxFDO&>(o).epsilon();
        case OracleKind::Multi: return static_cast<double>(o.max_failures()) + 2.0;
        case OracleKind::LowDiam: return 1.0;
    }
    return 1.0;
}

json build_record(const DiameterOracle& o, const OracleOptions& opt) {
    json r;
    r["record"] = "build";
    r["kind"] = std::string(kind_name(o.kind()));
    r["n"] = o.graph().n();
    r["m"] = o.graph().m();
    r["seed"] = opt.resolved_seed();
    r["stored_entries"] = o.stored_entries();
    r["max_failures"] = o.max_failures();
    if (auto* a = dynamic_cast<const ApproxFDO*>(&o)) {
        r["epsilon"] = a->epsilon();
        r["theta"] = a->theta();
        r["mode"] = std::string(scan_mode_name(a->mode()));
        r["pivots"] = a->pivots().size();
    } else if (auto* s = dynamic_cast<const SpannerFDO*>(&o)) {
        r["k"] = s->k();
        r["spanner_edges"] = s->spanner_values().size();
    } else if (auto* mf = dynamic_cast<const MultiFDO*>(&o)) {
        r["tight"] = mf->tight();
    } else if (auto* l = dynamic_cast<const LowDiamFDO*>(&o)) {
        r["delta"] = l->delta();
        r["backend"] = std::string(backend_name(l->backend()));
        r["subgraphs"] = l->stats().subgraphs;
        r["recursion_nodes"] = l->stats().nodes;
        r["max_fanout"] = l->stats().max_fanout;
    }
    return r;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::unique_ptr<DiameterOracle> read_oracle(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return load_oracle(in, g);
}

std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed) {
    return BitMatrix::random(1, count, seed).bits;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerant diameter oracles"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build an oracle and write it to a file");
    std::string graph_path, out_path, stats_path;
    bool timing = false;
    OracleOptions build_opt;
    build->add_option("--graph", graph_path, "edge-list file")->required();
    build_opt.add_to(build);
    build->add_option("--out", out_path, "oracle file")->required();
    build->add_option("--stats", stats_path, "build record destination (default stdout)");
    build->add_flag("--timing", timing, "append a timing record");

    // query
    auto* query = app.add_subcommand("query", "Answer failure sets read from stdin, one per line");
    std::string oracle_path;
    query->add_option("--graph", graph_path, "edge-list file")->required();
    query->add_option("--oracle", oracle_path, "oracle file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a gadget or random graph");
    std::string generator, manifest_path, eps = "1/2";
    std::size_t r = 2, n = 0, gf = 2, gk = 1, extra = 0, max_edges = 0;
    double p = 0.3;
    std::uint32_t max_weight = 10;
    std::optional<std::uint64_t> gen_seed;
    std::uint64_t payload_seed = 1;
    bool backbone = false;
    gen->add_option("generator", generator,
                    "dense-lb | sparse-lb | weighted-lb | multi-lb | multi-lb-f1 | er | er-undirected | "
                    "er-strongly-connected-digraph | er-weighted | low-diam-hub")
        ->required();
    gen->add_option("--r", r, "gadget matrix side")->check(CLI::Range(2, 1 << 12));
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--f", gf, "multi-lb: even number of failures");
    gen->add_option("--k", gk, "multi-lb: block count (fk + 1 <= n)");
    gen->add_option("--eps", eps, "weighted-lb: eps' as num/den");
    gen->add_option("--extra", extra, "weighted-lb: size of block R");
    gen->add_option("--max-weight", max_weight, "er-weighted: largest weight");
    gen->add_option("--max-edges", max_edges, "reject random samples with more edges");
    gen->add_flag("--backbone", backbone, "digraph: add a random Hamiltonian cycle");
    gen->add_option("--seed", gen_seed, "seed of random graphs");
    gen->add_option("--payload-seed", payload_seed, "seed of gadget payloads");
    gen->add_option("--out", out_path, "graph file (default stdout)");
    gen->add_option("--manifest", manifest_path, "gadget manifest file");

    // audit
    auto* aud = app.add_subcommand("audit", "Compare an oracle against brute force");
    OracleOptions audit_opt;
    std::optional<double> stretch;
    std::size_t samples = 1000;
    std::uint64_t enum_seed = 1;
    std::string audit_oracle;
    aud->add_option("--graph", graph_path, "edge-list file")->required();
    audit_opt.add_to(aud);
    aud->add_option("--oracle", audit_oracle, "audit a serialized oracle instead of building one");
    aud->add_option("--stretch", stretch, "allowed stretch (default: the oracle's guarantee)");
    aud->add_option("--samples", samples, "failure sets sampled when enumeration is too large");
    aud->add_option("--enum-seed", enum_seed, "seed of the failure sampler");
    aud->add_option("--out", out_path, "record destination (default stdout)");
    aud->add_flag("--timing", timing, "append a timing record");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            const Graph g = read_graph_file(graph_path);
            Built b = build_oracle(g, build_opt);
            write_text(out_path, b.oracle->to_string());
            std::string stats = build_record(*b.oracle, build_opt).dump() + "\n";
            if (timing) stats += json{{"record", "timing"}, {"build_ms", b.build_ms}}.dump() + "\n";
            write_text(stats_path, stats);
            return 0;
        }

        if (*query) {
            const Graph g = read_graph_file(graph_path);
            const auto oracle = read_oracle(oracle_path, g);
            std::string line;
            while (std::getline(std::cin, line)) {
                try {
                    std::cout << oracle->query(FailureSet::parse(g, line)).to_string() << '\n';
                } catch (const std::invalid_argument& e) {
                    std::cout << "error: " << e.what() << '\n';
                }
            }
            return 0;
        }

        if (*gen) {
            std::ostringstream graph_text, manifest;
            if (auto kind = parse_random_kind(generator == "er" ? "er-undirected" : generator)) {
                if (!gen_seed) throw PreconditionError("random generators need --seed");
                RandomParams rp;
                rp.n = n ? n : 20;
                rp.p = p;
                rp.seed = *gen_seed;
                rp.max_weight = max_weight;
                rp.backbone = backbone;
                rp.max_edges = max_edges;
                write_graph(graph_text, gen_random(*kind, rp));
            } else {
                GadgetInstance gadget;
                if (generator == "dense-lb") {
                    gadget = gen_dense_lb(BitMatrix::random(r, r, payload_seed));
                } else if (generator == "sparse-lb") {
                    gadget = gen_sparse_lb(BitMatrix::random(r, r, payload_seed), n ? n : 4 * r + 1);
                } else if (generator == "weighted-lb") {
                    const auto slash = eps.find('/');
                    if (slash == std::string::npos) throw PreconditionError("--eps must be num/den");
                    gadget = gen_weighted_lb(BitMatrix::random(r, r, payload_seed), std::stoull(eps.substr(0, slash)),
                                             std::stoull(eps.substr(slash + 1)), extra);
                } else if (generator == "multi-lb") {
                    const std::size_t total = n ? n : gf * gk + 1;
                    gadget = gen_multi_lb(gf, gk, total,
                                          random_bits(multi_lb_pairs(gf, gf * gk).size(), payload_seed));
                } else if (generator == "multi-lb-f1") {
                    const std::size_t total = n ? n : 6;
                    if (total < 4 || total % 2) throw PreconditionError("multi-lb-f1 needs an even n >= 4");
                    gadget = gen_multi_lb_f1(total, random_bits(total / 2 - 1, payload_seed));
                } else {
                    throw PreconditionError("unknown generator '" + generator + "'");
                }
                write_graph(graph_text, gadget.graph);
                write_manifest(manifest, gadget);
                if (!manifest_path.empty()) write_text(manifest_path, manifest.str());
            }
            write_text(out_path, graph_text.str());
            return 0;
        }

        if (*aud) {
            const Graph g = read_graph_file(graph_path);
            std::unique_ptr<DiameterOracle> oracle;
            if (!audit_oracle.empty())
                oracle = read_oracle(audit_oracle, g);
            else
                oracle = build_oracle(g, audit_opt).oracle;
            EnumeratorParams ep;
            ep.max_size = oracle->max_failures();
            ep.min_size = ep.max_size == 1 ? 1 : 0;
            ep.samples = samples;
            ep.seed = enum_seed;
            const auto sets = enumerate_failures(g, ep);
            AuditReport report = audit(*oracle, sets, stretch.value_or(default_stretch(*oracle)));
            report.exhaustive = enumeration_is_exhaustive(g, ep);
            report.params = {{"max_failures", std::to_string(oracle->max_failures())},
                             {"enum_seed", std::to_string(enum_seed)}};
            std::ostringstream out;
            report.write_jsonl(out, timing);
            write_text(out_path, out.str());
            std::cerr << "violations=" << report.violations << '\n';
            return report.violations == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
