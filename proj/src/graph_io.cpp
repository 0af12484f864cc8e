#include "fdo/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "fdo/error.hpp"

namespace fdo {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
    throw FormatError("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw FormatError("empty graph file");
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    std::string dir, wt, extra;
    if (!(header >> n >> m >> dir >> wt) || (header >> extra)) fail(lineno, "expected header 'n m D|U W|UW'");
    if (dir != "D" && dir != "U") fail(lineno, "direction must be D or U, got '" + dir + "'");
    if (wt != "W" && wt != "UW") fail(lineno, "weight flag must be W or UW, got '" + wt + "'");
    const bool directed = dir == "D";
    const bool weighted = wt == "W";

    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        if (!next_content_line(in, line, lineno))
            throw FormatError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string wtext;
        if (!(row >> u >> v) || u < 0 || v < 0) fail(lineno, "expected 'u v" + std::string(weighted ? " w'" : "'"));
        double w = 1.0;
        if (row >> wtext) {
            auto parsed = parse_number(wtext);
            if (!parsed) fail(lineno, "bad weight '" + wtext + "'");
            if (!weighted && *parsed != 1.0) fail(lineno, "weight given in unweighted graph");
            w = *parsed;
        } else if (weighted) {
            fail(lineno, "missing weight");
        }
        if (row >> extra) fail(lineno, "trailing data");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
    if (next_content_line(in, line, lineno)) fail(lineno, "more edges than declared");
    try {
        return Graph::build(n, directed, std::move(edges), weighted);
    } catch (const GraphError& e) {
        throw FormatError(e.what());
    }
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file " + path.string());
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << ' ' << (g.directed() ? 'D' : 'U') << ' ' << (g.weighted() ? "W" : "UW") << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.weighted()) out << ' ' << format_number(e.w);
        out << '\n';
    }
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace fdo
