#pragma once

#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "pattern.hpp"

namespace gfree {

// A subgraph of some host, written in the host's vertex labels. Not
// necessarily induced: edge deletions leave the vertex set alone.
struct Subgraph {
  std::vector<int> vertices;  // ascending host labels
  std::vector<Edge> edges;    // host label pairs, u < v, lex sorted
};

struct CriticalCertificate {
  Subgraph core;
  Graph core_graph;  // relabeled 0..|core|-1 in core.vertices order
  int k = 0;         // chi of the core == chi of the host
  // chi after deleting each element, aligned with core.vertices / core.edges;
  // criticality means every entry is exactly k-1
  std::vector<int> vertex_evidence;
  std::vector<int> edge_evidence;
  int min_degree = 0;
  int min_degree_required = 0;  // delta(pattern) * (k-1)
  bool mindeg_ok = true;
  bool is_whole_graph = false;
};

// Greedy deletion pass (vertices by ascending host degree, then edges in
// label order), keeping a deletion whenever chi stays put. The survivors
// form a critical core with chi equal to the host's.
CriticalCertificate extract_critical(const Graph& h, const PatternSpec& pat,
                                     const Deadline& deadline = {});

// A subgraph with chi exactly `target` (0 <= target <= chi(h)): repeatedly
// take a critical core and drop one vertex, which lowers chi by exactly one.
Graph subgraph_with_chi(const Graph& h, const PatternSpec& pat, int target,
                        const Deadline& deadline = {});

// Does every single-element deletion drop chi? (The empty graph and single
// vertices are vacuously critical.)
bool is_critical(const Graph& g, const PatternSpec& pat,
                 const Deadline& deadline = {});

}  // namespace gfree
