#pragma once

#include <string_view>

#include "graph.hpp"
#include "pattern.hpp"

namespace gfree {

// Spec strings name graphs without files:
//   atoms        K5  C6  P4  K3,4  4K1  K6-C6  petersen  g6:<graph6>
//   prefix t     before K/C/P/petersen makes t disjoint copies (3C5)
//   combinators  + join, . disjoint union; equal precedence, left to right
// so the extremal hosts read naturally: K6+4K1, K5.K4.
Graph parse_graph_spec(std::string_view text);

// Patterns use the same language plus:
//   cycles  the family of all 2-regular graphs
//   self    the host graph itself (needs `self_graph`)
PatternSpec parse_pattern_spec(std::string_view text,
                               const Graph* self_graph = nullptr);

}  // namespace gfree
