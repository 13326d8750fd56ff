#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace gfree {

// graph6: printable ASCII encoding of an undirected graph, bytes are
// 6-bit groups offset by 63, upper triangle scanned column by column.
std::string encode_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);  // throws ParseError with byte offset

// One graph per line; blank lines are skipped, bad lines are reported in
// `warnings` (1-based line numbers) and otherwise ignored.
std::vector<Graph> parse_graph6_lines(std::string_view text,
                                      std::vector<std::string>* warnings = nullptr);

// DIMACS edge format: "p edge n m" then m lines "e u v", 1-indexed.
// Comments ('c') allowed anywhere, duplicate edges collapse, loops rejected.
Graph parse_dimacs(std::string_view text);

}  // namespace gfree
