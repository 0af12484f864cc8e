#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fdo/graph.hpp"

namespace fdo {

// Edge-list text format:
//
//   # comment
//   n m D|U W|UW
//   u v [w]        (m lines, w present for W graphs)
//
// Lines starting with '#' and blank lines are skipped anywhere.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace fdo
