#include "enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "codec.hpp"
#include "errors.hpp"

namespace gfree {

namespace {

struct Canonizer {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best;
  std::vector<int> perm;  // position -> original vertex
  std::vector<char> used;

  explicit Canonizer(const Graph& graph)
      : g(graph),
        n(graph.order()),
        total_bits(n * (n - 1) / 2),
        best(total_bits ? (std::uint64_t(1) << total_bits) - 1 : 0),
        perm(n, -1),
        used(n, 0) {}

  void search(int depth, std::uint64_t acc, int bits) {
    if (depth == n) {
      best = std::min(best, acc);
      return;
    }
    struct Cand {
      std::uint64_t col;
      int v;
    };
    Cand cands[11];
    int m = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i)
        col = (col << 1) | (g.adjacent(perm[i], v) ? 1u : 0u);
      cands[m++] = {col, v};
    }
    std::sort(cands, cands + m,
              [](const Cand& a, const Cand& b) { return a.col < b.col; });
    for (int i = 0; i < m; ++i) {
      std::uint64_t acc2 = (acc << depth) | cands[i].col;
      int bits2 = bits + depth;
      // candidates ascend, so once the prefix exceeds the best one, stop
      if (bits2 > 0 && acc2 > (best >> (total_bits - bits2))) break;
      used[cands[i].v] = 1;
      perm[depth] = cands[i].v;
      search(depth + 1, acc2, bits2);
      used[cands[i].v] = 0;
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 11)
    throw Unsupported("canonical codes are limited to 11 vertices");
  Canonizer c(g);
  c.search(0, 0, 0);
  return c.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((code >> (total - 1 - idx)) & 1u) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::vector<Graph> enumerate_small_graphs(int n) {
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  if (n > 8)
    throw Unsupported(
        "enumeration stops at 8 vertices; feed a graph6 corpus for more");
  std::vector<std::uint64_t> level{0};  // the empty graph
  for (int s = 1; s <= n; ++s) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = graph_from_code(s - 1, code);
      for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (int i = 0; i < s - 1; ++i)
          if ((mask >> i) & 1u) edges.emplace_back(i, s - 1);
        next.insert(canonical_code(Graph(s, edges)));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    out.push_back(g.with_name(encode_graph6(g)));
  }
  return out;
}

}  // namespace gfree
