#include "critical.hpp"

#include <algorithm>

#include "errors.hpp"
#include "solver.hpp"

namespace gfree {

namespace {

bool chi_at_most(const Graph& g, const PatternSpec& pat, int t,
                 const Deadline& deadline) {
  if (t <= 0) return g.order() == 0;
  return decide_k_colorable(g, pat, t, deadline).has_value();
}

// The greedy core: delete while chi stays at k. Returns the reduced graph
// plus the surviving host labels. Soundness of the single pass: when a
// deletion is rejected, chi of (current minus x) is already <= k-1, and the
// final core is a subgraph of every later "current", so chi(core minus x)
// <= k-1 holds by monotonicity no matter what is deleted afterwards.
std::pair<Graph, std::vector<int>> reduce_to_core(const Graph& h,
                                                  const PatternSpec& pat,
                                                  int k,
                                                  const Deadline& deadline) {
  std::vector<int> by_degree(h.order());
  for (int v = 0; v < h.order(); ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return h.degree(a) < h.degree(b); });

  Graph cur = h;
  std::vector<int> ids(h.order());
  for (int v = 0; v < h.order(); ++v) ids[v] = v;

  for (int label : by_degree) {
    int pos = static_cast<int>(
        std::lower_bound(ids.begin(), ids.end(), label) - ids.begin());
    Graph tentative = cur.without_vertex(pos);
    if (!chi_at_most(tentative, pat, k - 1, deadline)) {
      cur = std::move(tentative);
      ids.erase(ids.begin() + pos);
    }
  }
  for (auto [u, v] : cur.edges()) {  // ids ascend, so local lex == host lex
    if (!cur.adjacent(u, v)) continue;
    Graph tentative = cur.without_edge(u, v);
    if (!chi_at_most(tentative, pat, k - 1, deadline))
      cur = std::move(tentative);
  }
  return {std::move(cur), std::move(ids)};
}

}  // namespace

CriticalCertificate extract_critical(const Graph& h, const PatternSpec& pat,
                                     const Deadline& deadline) {
  int k = chi_g_exact(h, pat, deadline).value;
  int delta = pat.min_degree();
  CriticalCertificate cert;
  cert.k = k;
  cert.min_degree_required = k >= 1 ? delta * (k - 1) : 0;
  if (k == 0) {
    cert.core_graph = Graph(0);
    cert.is_whole_graph = true;
    return cert;
  }

  auto [core, ids] = reduce_to_core(h, pat, k, deadline);
  cert.core.vertices = ids;
  for (auto [u, v] : core.edges())
    cert.core.edges.emplace_back(ids[u], ids[v]);
  for (int i = 0; i < core.order(); ++i)
    cert.vertex_evidence.push_back(
        chi_g_exact(core.without_vertex(i), pat, deadline).value);
  for (auto [u, v] : core.edges())
    cert.edge_evidence.push_back(
        chi_g_exact(core.without_edge(u, v), pat, deadline).value);
  cert.min_degree = core.min_degree();
  cert.mindeg_ok = cert.min_degree >= cert.min_degree_required;
  cert.is_whole_graph =
      core.order() == h.order() && core.size() == h.size();
  cert.core_graph = std::move(core);
  return cert;
}

Graph subgraph_with_chi(const Graph& h, const PatternSpec& pat, int target,
                        const Deadline& deadline) {
  int k = chi_g_exact(h, pat, deadline).value;
  if (target < 0 || target > k)
    throw InvalidArgument("target chi " + std::to_string(target) +
                          " is outside 0.." + std::to_string(k));
  Graph cur = h;
  while (k > target) {
    auto [core, ids] = reduce_to_core(cur, pat, k, deadline);
    cur = core.without_vertex(0);  // drops chi by exactly one
    --k;
  }
  return cur;
}

bool is_critical(const Graph& g, const PatternSpec& pat,
                 const Deadline& deadline) {
  int k = chi_g_exact(g, pat, deadline).value;
  if (k == 0) return true;
  for (int v = 0; v < g.order(); ++v)
    if (!chi_at_most(g.without_vertex(v), pat, k - 1, deadline)) return false;
  for (auto [u, v] : g.edges())
    if (!chi_at_most(g.without_edge(u, v), pat, k - 1, deadline)) return false;
  return true;
}

}  // namespace gfree
