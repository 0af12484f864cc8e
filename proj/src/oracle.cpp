#include "fdo/oracle.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "fdo/error.hpp"
#include "fdo/fdo_lowdiam.hpp"
#include "fdo/fdo_multi.hpp"
#include "fdo/fdo_single.hpp"
#include "serialize_util.hpp"

namespace fdo {

namespace {

constexpr std::pair<OracleKind, std::string_view> kKindNames[] = {
    {OracleKind::Exact, "exact"},   {OracleKind::Ecc, "ecc"},     {OracleKind::Spanner, "spanner"},
    {OracleKind::Approx, "approx"}, {OracleKind::Multi, "multi"}, {OracleKind::LowDiam, "lowdiam"},
};

std::string hex(std::uint64_t value) {
    std::ostringstream s;
    s << std::hex << value;
    return s.str();
}

OracleHeader parse_header(std::string_view line) {
    auto fields = split_fields(line);
    if (fields.size() < 4 || fields[0] != "FDO") throw FormatError("missing 'FDO' header line");
    OracleHeader h;
    auto kind = parse_kind(fields[1]);
    if (!kind) throw FormatError("unknown oracle kind '" + std::string(fields[1]) + "'");
    h.kind = *kind;
    h.n = parse_unsigned(fields[2]);
    h.m = parse_unsigned(fields[3]);
    for (std::size_t i = 4; i < fields.size(); ++i) {
        const std::size_t eq = fields[i].find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw FormatError("bad header parameter '" + std::string(fields[i]) + "'");
        std::string key(fields[i].substr(0, eq));
        if (h.find(key)) throw FormatError("repeated header parameter '" + key + "'");
        h.params.emplace_back(std::move(key), std::string(fields[i].substr(eq + 1)));
    }
    return h;
}

}  // namespace

std::string_view kind_name(OracleKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

std::optional<OracleKind> parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    return std::nullopt;
}

std::string DiameterOracle::to_string() const {
    std::ostringstream out;
    serialize(out);
    return out.str();
}

const std::string* OracleHeader::find(std::string_view key) const {
    for (const auto& [k, v] : params)
        if (k == key) return &v;
    return nullptr;
}

const std::string& OracleHeader::at(std::string_view key) const {
    if (const std::string* v = find(key)) return *v;
    throw FormatError("missing header parameter '" + std::string(key) + "'");
}

double OracleHeader::number(std::string_view key) const {
    auto v = parse_number(at(key));
    if (!v) throw FormatError("header parameter '" + std::string(key) + "' is not a number");
    return *v;
}

std::uint64_t OracleHeader::integer(std::string_view key) const { return parse_unsigned(at(key)); }

Distance OracleHeader::distance(std::string_view key) const {
    auto d = Distance::parse(at(key));
    if (!d) throw FormatError("header parameter '" + std::string(key) + "' is not a distance");
    return *d;
}

void write_header(std::ostream& out, OracleKind kind, const Graph& g,
                  const std::vector<std::pair<std::string, std::string>>& params) {
    out << "FDO " << kind_name(kind) << ' ' << g.n() << ' ' << g.m() << " version=" << kFormatVersion
        << " graph=" << hex(g.fingerprint());
    for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
    out << '\n';
}

std::unique_ptr<DiameterOracle> load_oracle(std::istream& in, const Graph& g) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty oracle file");
    const OracleHeader header = parse_header(line);
    if (header.integer("version") != static_cast<std::uint64_t>(kFormatVersion))
        throw FormatError("unsupported oracle format version " + header.at("version"));
    if (header.n != g.n() || header.m != g.m() || header.at("graph") != hex(g.fingerprint()))
        throw FormatError("oracle was built for a different graph");

    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    switch (header.kind) {
        case OracleKind::Exact: return ExactFDO::load(header, lines, g);
        case OracleKind::Ecc: return EccFDO::load(header, lines, g);
        case OracleKind::Spanner: return SpannerFDO::load(header, lines, g);
        case OracleKind::Approx: return ApproxFDO::load(header, lines, g);
        case OracleKind::Multi: return MultiFDO::load(header, lines, g);
        case OracleKind::LowDiam: return LowDiamFDO::load(header, lines, g);
    }
    throw FormatError("unknown oracle kind");
}

std::unique_ptr<DiameterOracle> load_oracle(std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    return load_oracle(in, g);
}

std::optional<EdgeId> single_failure(const Graph& g, const FailureSet& failures) {
    if (failures.size() != 1) throw QueryError("single-failure oracle expects exactly one failed pair");
    auto resolved = failures.resolve(g);
    if (resolved.edges.empty()) return std::nullopt;
    return resolved.edges.front();
}

}  // namespace fdo
