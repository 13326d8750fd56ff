#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gfree {

enum class ContainMode { Subgraph, Induced };

// What a color class must avoid: either copies of one fixed graph, or any
// cycle at all (the "every 2-regular graph" family, which turns the
// chromatic variant into vertex arboricity).
class PatternSpec {
 public:
  static PatternSpec single(Graph g, ContainMode mode = ContainMode::Subgraph);
  static PatternSpec all_two_regular();

  bool is_family() const { return family_; }
  const Graph& graph() const;      // throws for the family
  int min_degree() const;          // family -> 2 (every cycle is 2-regular)
  ContainMode mode() const { return mode_; }
  std::string describe() const;

 private:
  PatternSpec() = default;
  bool family_ = false;
  Graph graph_;
  ContainMode mode_ = ContainMode::Subgraph;
};

struct CopyWitness {
  std::vector<int> host_vertices;  // image of the pattern, in pattern-vertex order
};

// Does `host` contain a copy of the pattern (under the pattern's mode)?
bool contains_copy(const Graph& host, const PatternSpec& pat,
                   CopyWitness* witness = nullptr);

// After adding `v` to the class given by `cls` (v already set in cls),
// is the class still free of the pattern? Only copies through v can be new.
bool class_remains_free(const Graph& host, const PatternSpec& pat,
                        const Bitset& cls, int v);

int clique_number(const Graph& g);
std::optional<int> girth(const Graph& g);  // empty for forests

}  // namespace gfree
