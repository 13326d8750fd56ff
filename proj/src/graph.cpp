#include "graph.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gfree {

Graph::Graph(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  adj_.assign(n_, Bitset(n_));
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
    : Graph(n, std::move(name)) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InvalidArgument("edge endpoint out of range: (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
  }
}

void Graph::add_edge_unchecked(int u, int v) {
  if (adj_[u].test(v)) return;  // collapse duplicates
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph g(n_, name_.empty() ? std::string{} : "~(" + name_ + ")");
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::induced(const Bitset& keep) const {
  if (keep.size() != n_) throw InvalidArgument("vertex set size mismatch");
  return induced(keep.to_vector());
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> vs = keep;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InvalidArgument("duplicate vertex in induced subgraph set");
  Graph g(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= n_)
      throw InvalidArgument("vertex out of range in induced subgraph set");
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j]))
        g.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

Graph Graph::without_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidArgument("vertex out of range");
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v))
    throw InvalidArgument("no such edge");
  Graph g = *this;
  g.adj_[u].reset(v);
  g.adj_[v].reset(u);
  --g.m_;
  return g;
}

Graph Graph::join(const Graph& a, const Graph& b) {
  Graph g(a.n_ + b.n_);
  for (int u = 0; u < a.n_; ++u)
    for (int v = a.adj_[u].next(u + 1); v >= 0; v = a.adj_[u].next(v + 1))
      g.add_edge_unchecked(u, v);
  for (int u = 0; u < b.n_; ++u)
    for (int v = b.adj_[u].next(u + 1); v >= 0; v = b.adj_[u].next(v + 1))
      g.add_edge_unchecked(a.n_ + u, a.n_ + v);
  for (int u = 0; u < a.n_; ++u)
    for (int v = 0; v < b.n_; ++v) g.add_edge_unchecked(u, a.n_ + v);
  if (!a.name_.empty() && !b.name_.empty()) g.name_ = a.name_ + "+" + b.name_;
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n_ + b.n_);
  for (int u = 0; u < a.n_; ++u)
    for (int v = a.adj_[u].next(u + 1); v >= 0; v = a.adj_[u].next(v + 1))
      g.add_edge_unchecked(u, v);
  for (int u = 0; u < b.n_; ++u)
    for (int v = b.adj_[u].next(u + 1); v >= 0; v = b.adj_[u].next(v + 1))
      g.add_edge_unchecked(a.n_ + u, a.n_ + v);
  if (!a.name_.empty() && !b.name_.empty()) g.name_ = a.name_ + "." + b.name_;
  return g;
}

Graph::Peeling Graph::degeneracy() const {
  Peeling p;
  p.order.reserve(n_);
  std::vector<int> deg(n_);
  for (int v = 0; v < n_; ++v) deg[v] = degree(v);
  Bitset alive = Bitset::full(n_);
  for (int step = 0; step < n_; ++step) {
    int best = -1;
    for (int v = alive.next(0); v >= 0; v = alive.next(v + 1))
      if (best < 0 || deg[v] < deg[best]) best = v;
    p.degeneracy = std::max(p.degeneracy, deg[best]);
    p.order.push_back(best);
    alive.reset(best);
    for (int u = adj_[best].next(0); u >= 0; u = adj_[best].next(u + 1))
      if (alive.test(u)) --deg[u];
  }
  return p;
}

Graph complete_graph(int n) {
  if (n < 0) throw InvalidArgument("K_n needs n >= 0");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es, "K" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("C_n needs n >= 3");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es, "C" + std::to_string(n));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("P_n needs n >= 1");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es, "P" + std::to_string(n));
}

Graph empty_graph(int n) {
  if (n < 0) throw InvalidArgument("nK_1 needs n >= 0");
  return Graph(n, std::to_string(n) + "K1");
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("K_{a,b} needs a,b >= 1");
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph(a + b, es, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph complete_minus_hamiltonian_cycle(int d) {
  if (d < 2) throw InvalidArgument("K_{2d} minus C_{2d} needs d >= 2");
  int n = 2 * d;
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool on_cycle = (v == u + 1) || (u == 0 && v == n - 1);
      if (!on_cycle) es.emplace_back(u, v);
    }
  return Graph(n, es, "K" + std::to_string(n) + "-C" + std::to_string(n));
}

Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer cycle
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    es.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, es, "petersen");
}

Graph disjoint_copies(int t, const Graph& g) {
  if (t < 1) throw InvalidArgument("disjoint copies needs t >= 1");
  Graph out = g;
  for (int i = 1; i < t; ++i) out = Graph::disjoint_union(out, g);
  if (!g.name().empty()) out = out.with_name(std::to_string(t) + g.name());
  return out;
}

}  // namespace gfree
