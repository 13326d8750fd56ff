#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace gfree {

// Isomorphism-invariant code: the lexicographically smallest upper-triangle
// bitstring (column-major, first pair most significant) over all vertex
// orderings. Fits 64 bits through n = 11.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

// Every graph on n vertices, one per isomorphism class, sorted by canonical
// code. Grown level by level: each (n-1)-representative is extended with all
// possible neighborhoods for a new vertex, then deduplicated.
std::vector<Graph> enumerate_small_graphs(int n);

}  // namespace gfree
