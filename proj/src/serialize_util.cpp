#include "serialize_util.hpp"

#include <charconv>

#include "fdo/error.hpp"

namespace fdo {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_unsigned(std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw FormatError("expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

std::pair<EdgeId, Distance> parse_edge_entry(std::string_view line, std::size_t m) {
    auto fields = split_fields(line);
    if (fields.size() != 2) throw FormatError("bad entry line '" + std::string(line) + "'");
    const std::uint64_t e = parse_unsigned(fields[0]);
    if (e >= m) throw FormatError("edge id " + std::to_string(e) + " out of range");
    auto d = Distance::parse(fields[1]);
    if (!d) throw FormatError("bad distance '" + std::string(fields[1]) + "'");
    return {static_cast<EdgeId>(e), *d};
}

std::vector<std::uint32_t> parse_id_list(std::string_view text, std::size_t bound) {
    std::vector<std::uint32_t> out;
    if (text == "-") return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        const std::uint64_t id = parse_unsigned(text.substr(start, comma - start));
        if (id >= bound) throw FormatError("id " + std::to_string(id) + " out of range");
        out.push_back(static_cast<std::uint32_t>(id));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_id_list(const std::vector<std::uint32_t>& ids, char sep) {
    if (ids.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(ids[i]);
    }
    return out;
}

}  // namespace fdo
