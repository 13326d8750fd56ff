#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace gfree {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Adjacency is stored as one bitset row per vertex. Values are cheap to copy
// at the scales this library targets and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::string name = {});
  Graph(int n, const std::vector<Edge>& edges, std::string name = {});

  int order() const { return n_; }
  long size() const { return m_; }
  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const;

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;
  int min_degree() const;  // 0 for the empty graph

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  Graph complement() const;
  Graph induced(const Bitset& keep) const;  // relabels to 0..|keep|-1, label order preserved
  Graph induced(const std::vector<int>& keep) const;
  Graph without_vertex(int v) const;
  Graph without_edge(int u, int v) const;

  static Graph join(const Graph& a, const Graph& b);
  static Graph disjoint_union(const Graph& a, const Graph& b);

  struct Peeling {
    int degeneracy = 0;
    std::vector<int> order;  // min-degree peel order
  };
  // Iterative min-degree peeling; the value equals the maximum over induced
  // subgraphs of the minimum degree.
  Peeling degeneracy() const;

  // Label-sensitive equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void add_edge_unchecked(int u, int v);

  int n_ = 0;
  long m_ = 0;
  std::vector<Bitset> adj_;
  std::string name_;
};

// Named constructions.
Graph complete_graph(int n);                    // K_n
Graph cycle_graph(int n);                       // C_n, n >= 3
Graph path_graph(int n);                        // P_n (n vertices)
Graph empty_graph(int n);                       // nK_1
Graph complete_bipartite(int a, int b);         // K_{a,b}
Graph complete_minus_hamiltonian_cycle(int d);  // K_{2d} minus C_{2d}, d >= 2
Graph petersen_graph();
Graph disjoint_copies(int t, const Graph& g);  // t disjoint copies

}  // namespace gfree
