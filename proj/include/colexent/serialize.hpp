#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "colexent/graph.hpp"

namespace colexent {

/// One "u v" pair per line, 0-indexed, edges in sorted order.
/// Note: isolated vertices are not representable in this format.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);

/// graph6 (McKay's format), without the ">>graph6<<" header.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

/// Comma-separated degrees, e.g. "8,8,8,7,7,7,7,7,3".
std::string to_string(const DegreeSequence& s);
DegreeSequence parse_degree_sequence(std::string_view text);

}  // namespace colexent
