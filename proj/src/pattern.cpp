#include "pattern.hpp"

#include <algorithm>

#include "codec.hpp"
#include "errors.hpp"

namespace gfree {

PatternSpec PatternSpec::single(Graph g, ContainMode mode) {
  if (g.order() < 2)
    throw InvalidArgument("forbidden pattern needs at least 2 vertices");
  PatternSpec p;
  p.graph_ = std::move(g);
  p.mode_ = mode;
  return p;
}

PatternSpec PatternSpec::all_two_regular() {
  PatternSpec p;
  p.family_ = true;
  return p;
}

const Graph& PatternSpec::graph() const {
  if (family_)
    throw InvalidArgument("the 2-regular family is not a single graph");
  return graph_;
}

int PatternSpec::min_degree() const {
  return family_ ? 2 : graph_.min_degree();
}

std::string PatternSpec::describe() const {
  if (family_) return "cycles";
  std::string base =
      graph_.name().empty() ? "g6:" + encode_graph6(graph_) : graph_.name();
  if (mode_ == ContainMode::Induced) base += " (induced)";
  return base;
}

namespace {

// Assignment order for the embedding search: components contiguous, BFS
// within a component. `start`, when given, leads its component.
std::vector<int> embed_order(const Graph& pat, int start) {
  int n = pat.order();
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  auto bfs = [&](int root) {
    seen[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      int u = order[head++];
      pat.neighbors(u).for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      });
    }
  };
  if (start >= 0) bfs(start);
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (pick < 0 || pat.degree(v) > pat.degree(pick))) pick = v;
    if (pick < 0) break;
    bfs(pick);
  }
  return order;
}

struct Embedder {
  const Graph& host;
  const Graph& pat;
  ContainMode mode;
  const Bitset& mask;  // host vertices the copy may use
  std::vector<int> order;
  std::vector<int> map;  // pattern vertex -> host vertex, -1 unset
  Bitset used;
  int anchor_pat = -1;
  int anchor_host = -1;

  Embedder(const Graph& h, const Graph& p, ContainMode m, const Bitset& msk)
      : host(h), pat(p), mode(m), mask(msk), map(p.order(), -1),
        used(h.order()) {}

  bool feasible(int u, int c) const {
    if (host.neighbors(c).count_and(mask) < pat.degree(u)) return false;
    for (int w = 0; w < pat.order(); ++w) {
      if (map[w] < 0) continue;
      bool pe = pat.adjacent(u, w);
      bool he = host.adjacent(c, map[w]);
      if (pe && !he) return false;
      if (!pe && he && mode == ContainMode::Induced) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    if (u == anchor_pat) {
      int c = anchor_host;
      if (!mask.test(c) || used.test(c) || !feasible(u, c)) return false;
      map[u] = c;
      used.set(c);
      if (extend(depth + 1)) return true;
      map[u] = -1;
      used.reset(c);
      return false;
    }
    Bitset cand = mask;
    cand.andnot(used);
    pat.neighbors(u).for_each([&](int w) {
      if (map[w] >= 0) cand &= host.neighbors(map[w]);
    });
    for (int c = cand.next(0); c >= 0; c = cand.next(c + 1)) {
      if (!feasible(u, c)) continue;
      map[u] = c;
      used.set(c);
      if (extend(depth + 1)) return true;
      map[u] = -1;
      used.reset(c);
    }
    return false;
  }
};

// One copy of `pat` inside host[mask]; anchor_host, when >= 0, must be in the
// image (every pattern vertex is tried as its preimage).
bool find_single(const Graph& host, const Graph& pat, ContainMode mode,
                 const Bitset& mask, int anchor_host, CopyWitness* witness) {
  if (pat.order() > mask.count()) return false;
  auto run = [&](int anchor_pat) {
    Embedder e(host, pat, mode, mask);
    e.anchor_pat = anchor_pat;
    e.anchor_host = anchor_host;
    e.order = embed_order(pat, anchor_pat);
    if (!e.extend(0)) return false;
    if (witness) witness->host_vertices = e.map;
    return true;
  };
  if (anchor_host < 0) return run(-1);
  for (int a = 0; a < pat.order(); ++a)
    if (run(a)) return true;
  return false;
}

// Any cycle inside host[mask]; witness lists the cycle vertices in order.
bool find_cycle(const Graph& host, const Bitset& mask, CopyWitness* witness) {
  int n = host.order();
  std::vector<int> parent(n, -2);  // -2 unvisited, -1 root
  std::vector<int> stack;
  for (int r = mask.next(0); r >= 0; r = mask.next(r + 1)) {
    if (parent[r] != -2) continue;
    parent[r] = -1;
    stack.assign(1, r);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = host.neighbors(u).next(0); w >= 0;
           w = host.neighbors(u).next(w + 1)) {
        if (!mask.test(w)) continue;
        if (parent[w] == -2) {
          parent[w] = u;
          stack.push_back(w);
        } else if (w != parent[u] && u != parent[w]) {
          if (witness) {
            // u and w are both discovered; close the walk along parents
            std::vector<int> pu{u}, pw{w};
            for (int x = u; parent[x] >= 0; x = parent[x])
              pu.push_back(parent[x]);
            for (int x = w; parent[x] >= 0; x = parent[x])
              pw.push_back(parent[x]);
            // drop the common tail, keep the junction once
            while (pu.size() > 1 && pw.size() > 1 &&
                   pu[pu.size() - 2] == pw[pw.size() - 2]) {
              pu.pop_back();
              pw.pop_back();
            }
            // pu = u..LCA, pw = w..LCA; cycle is u..LCA followed by the
            // reversed pw minus the junction, ending at w
            witness->host_vertices.assign(pu.begin(), pu.end());
            witness->host_vertices.insert(witness->host_vertices.end(),
                                          pw.rbegin() + 1, pw.rend());
          }
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool contains_copy(const Graph& host, const PatternSpec& pat,
                   CopyWitness* witness) {
  Bitset all = Bitset::full(host.order());
  if (pat.is_family()) return find_cycle(host, all, witness);
  return find_single(host, pat.graph(), pat.mode(), all, -1, witness);
}

bool class_remains_free(const Graph& host, const PatternSpec& pat,
                        const Bitset& cls, int v) {
  if (pat.is_family()) {
    // a new cycle through v exists iff two of v's class neighbors are
    // already connected inside cls minus v
    Bitset rest = cls;
    rest.reset(v);
    Bitset nb = host.neighbors(v);
    nb &= rest;
    if (nb.count() < 2) return true;
    std::vector<int> comp(host.order(), -1);
    std::vector<int> stack;
    int comps = 0;
    for (int r = rest.next(0); r >= 0; r = rest.next(r + 1)) {
      if (comp[r] >= 0) continue;
      comp[r] = comps;
      stack.assign(1, r);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w = host.neighbors(u).next(0); w >= 0;
             w = host.neighbors(u).next(w + 1))
          if (rest.test(w) && comp[w] < 0) {
            comp[w] = comps;
            stack.push_back(w);
          }
      }
      ++comps;
    }
    std::vector<char> hit(comps, 0);
    for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
      if (hit[comp[w]]) return false;
      hit[comp[w]] = 1;
    }
    return true;
  }
  return !find_single(host, pat.graph(), pat.mode(), cls, v, nullptr);
}

namespace {

void expand_clique(const Graph& g, Bitset cand, int size, int& best) {
  // greedy-color the candidates; a vertex of color c caps any clique
  // through it at size + c
  std::vector<std::vector<int>> buckets;
  for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
    std::size_t c = 0;
    for (; c < buckets.size(); ++c) {
      bool clash = false;
      for (int u : buckets[c])
        if (g.adjacent(u, v)) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    if (c == buckets.size()) buckets.emplace_back();
    buckets[c].push_back(v);
  }
  std::vector<std::pair<int, int>> ordered;  // (color, vertex), color ascending
  for (std::size_t c = 0; c < buckets.size(); ++c)
    for (int v : buckets[c]) ordered.emplace_back(static_cast<int>(c) + 1, v);
  for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
    auto [c, v] = *it;
    if (size + c <= best) return;  // colors only shrink toward the front
    Bitset next = cand;
    next &= g.neighbors(v);
    if (next.none())
      best = std::max(best, size + 1);
    else
      expand_clique(g, next, size + 1, best);
    cand.reset(v);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 0;
  expand_clique(g, Bitset::full(g.order()), 0, best);
  return best;
}

std::optional<int> girth(const Graph& g) {
  int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n), queue;
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[r] = 0;
    queue.assign(1, r);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w = g.neighbors(u).next(0); w >= 0;
           w = g.neighbors(u).next(w + 1)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && u != parent[w]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace gfree
