#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdo/distance.hpp"

namespace fdo {

/// Parses an entry line "edge_id value"; throws FormatError.
std::pair<EdgeId, Distance> parse_edge_entry(std::string_view line, std::size_t m);

/// Parses "-" (empty) or a comma-separated list of ids below `bound`.
std::vector<std::uint32_t> parse_id_list(std::string_view text, std::size_t bound);
std::string format_id_list(const std::vector<std::uint32_t>& ids, char sep = ',');

/// Splits on runs of spaces/tabs.
std::vector<std::string_view> split_fields(std::string_view line);

std::uint64_t parse_unsigned(std::string_view text);

}  // namespace fdo
