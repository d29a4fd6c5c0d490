#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "indgap/graph.hpp"

namespace indgap {

/// Parse one graph6 line (optionally prefixed with ">>graph6<<"). Throws
/// ParseError carrying the byte offset of the offending character. Accepts
/// the 1-, 4-, and 8-byte size headers of the standard format.
Graph parse_graph6(std::string_view line);

/// Minimal-header graph6 encoding.
std::string to_graph6(const Graph& g);

/// Edge-list format: first line "n", then one "u v" pair per line with
/// 0 <= u != v < n. Blank lines are ignored; duplicate edges collapse.
/// ParseError positions are 1-based line numbers.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

enum class GraphFormat { graph6, edgelist };

/// Reads a whole stream: one graph per non-blank line for graph6, or a single
/// graph for the edge-list format.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

}  // namespace indgap
