#include "solver.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gfree {

std::vector<Bitset> Coloring::classes(int n) const {
  std::vector<Bitset> out(k, Bitset(n));
  for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
    out[assignment[v]].set(v);
  return out;
}

namespace {

struct DecideSearch {
  const Graph& h;
  const PatternSpec& pat;
  int k;
  const Deadline& deadline;
  std::vector<int> order;        // reverse peel order
  std::vector<int> color;        // by vertex, -1 unset
  std::vector<Bitset> cls;       // members per color
  int used = 0;                  // colors opened so far

  bool assign(std::size_t depth) {
    deadline.tick("decide_k_colorable");
    if (depth == order.size()) return true;
    int v = order[depth];
    int cap = std::min({static_cast<int>(depth), k - 1, used});
    for (int c = 0; c <= cap; ++c) {
      cls[c].set(v);
      if (class_remains_free(h, pat, cls[c], v)) {
        color[v] = c;
        int prev = used;
        used = std::max(used, c + 1);
        if (assign(depth + 1)) return true;
        used = prev;
        color[v] = -1;
      }
      cls[c].reset(v);
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> decide_k_colorable(const Graph& h,
                                           const PatternSpec& pat, int k,
                                           const Deadline& deadline) {
  if (k < 0) throw InvalidArgument("color count must be nonnegative");
  deadline.check("decide_k_colorable");
  int n = h.order();
  if (n == 0) return Coloring{k, {}, pat};
  if (k >= n) {
    // singletons can never host a pattern (patterns have >= 2 vertices,
    // cycles >= 3)
    std::vector<int> singles(n);
    for (int v = 0; v < n; ++v) singles[v] = v;
    return Coloring{k, std::move(singles), pat};
  }
  DecideSearch s{h, pat, k, deadline, {}, {}, {}, 0};
  s.order = h.degeneracy().order;
  std::reverse(s.order.begin(), s.order.end());
  s.color.assign(n, -1);
  s.cls.assign(k, Bitset(n));
  if (!s.assign(0)) return std::nullopt;
  return Coloring{k, std::move(s.color), pat};
}

ChiResult chi_g_exact(const Graph& h, const PatternSpec& pat,
                      const Deadline& deadline) {
  if (h.order() == 0) return {0, Coloring{0, {}, pat}};
  if (!contains_copy(h, pat))
    return {1, Coloring{1, std::vector<int>(h.order(), 0), pat}};
  for (int k = 2;; ++k) {
    auto c = decide_k_colorable(h, pat, k, deadline);
    if (c) return {k, std::move(*c)};
  }
}

int chromatic_number(const Graph& g, const Deadline& deadline) {
  return chi_g_exact(g, PatternSpec::single(complete_graph(2)), deadline)
      .value;
}

Coloring greedy_degeneracy_coloring(const Graph& h, const PatternSpec& pat) {
  if (pat.min_degree() < 1)
    throw InvalidArgument("greedy coloring needs a pattern of minimum degree 1");
  int n = h.order();
  std::vector<int> order = h.degeneracy().order;
  std::reverse(order.begin(), order.end());
  std::vector<int> color(n, -1);
  std::vector<Bitset> cls;
  for (int v : order) {
    std::size_t c = 0;
    for (; c < cls.size(); ++c) {
      cls[c].set(v);
      if (class_remains_free(h, pat, cls[c], v)) break;
      cls[c].reset(v);
    }
    if (c == cls.size()) {
      cls.emplace_back(n);
      cls[c].set(v);
    }
    color[v] = static_cast<int>(c);
  }
  return Coloring{static_cast<int>(cls.size()), std::move(color), pat};
}

LovaszResult lovasz_decomposition(const Graph& h, const DegreeBounds& bounds) {
  int k = static_cast<int>(bounds.d.size());
  if (k < 1) throw InvalidArgument("need at least one class");
  long sum = 0;
  for (int di : bounds.d) {
    if (di < 0) throw InvalidArgument("degree caps must be non-negative");
    sum += di;
  }
  if (sum < h.max_degree() - k + 1)
    throw InvalidArgument(
        "degree caps too small: need sum(d) >= maxdeg - k + 1");

  int n = h.order();
  std::vector<int> cls_of(n);
  std::vector<Bitset> cls(k, Bitset(n));
  for (int v = 0; v < n; ++v) {
    cls_of[v] = v % k;
    cls[v % k].set(v);
  }
  auto inside_deg = [&](int v, int c) {
    return static_cast<int>(h.neighbors(v).count_and(cls[c]));
  };
  auto potential = [&]() {
    long phi = 0;
    for (int c = 0; c < k; ++c) {
      long e = 0;
      for (int v = cls[c].next(0); v >= 0; v = cls[c].next(v + 1))
        e += inside_deg(v, c);
      phi += e / 2 - static_cast<long>(bounds.d[c]) * cls[c].count();
    }
    return phi;
  };

  LovaszResult out;
  out.potentials.push_back(potential());
  for (;;) {
    int v = -1, from = -1;
    for (int u = 0; u < n && v < 0; ++u)
      if (inside_deg(u, cls_of[u]) > bounds.d[cls_of[u]]) {
        v = u;
        from = cls_of[u];
      }
    if (v < 0) break;
    int to = -1, best = 0;
    for (int c = 0; c < k; ++c) {
      if (c == from) continue;
      int score = inside_deg(v, c) - bounds.d[c];
      if (to < 0 || score < best) {
        to = c;
        best = score;
      }
    }
    cls[from].reset(v);
    cls[to].set(v);
    cls_of[v] = to;
    out.potentials.push_back(potential());
  }
  out.classes = std::move(cls);
  return out;
}

MaxDegBound bound_maxdeg(const Graph& h, const PatternSpec& pat) {
  if (pat.is_family())
    throw InvalidArgument("maximum-degree bound takes a single pattern graph");
  int dg = pat.graph().max_degree();
  if (dg < 1)
    throw InvalidArgument("maximum-degree bound needs a pattern with an edge");
  int value = ceil_div(h.max_degree() + 1, dg);
  DegreeBounds caps{std::vector<int>(value, dg - 1)};
  LovaszResult dec = lovasz_decomposition(h, caps);
  std::vector<int> color(h.order(), -1);
  for (int c = 0; c < value; ++c)
    for (int v = dec.classes[c].next(0); v >= 0; v = dec.classes[c].next(v + 1))
      color[v] = c;
  return {value, Coloring{value, std::move(color), pat}};
}

std::optional<int> bound_chromatic(const Graph& h, const PatternSpec& pat,
                                   const Deadline& deadline) {
  if (pat.is_family()) return std::nullopt;
  int cg = chromatic_number(pat.graph(), deadline);
  if (cg < 2) return std::nullopt;
  return ceil_div(chromatic_number(h, deadline), cg - 1);
}

BoundReport compute_bounds(const Graph& h, const PatternSpec& pat,
                           const Deadline& deadline) {
  ChiResult exact = chi_g_exact(h, pat, deadline);
  BoundReport r{exact.value, {}, {}, {}, {}, std::move(exact.witness)};
  int delta = pat.min_degree();
  if (delta >= 1) {
    r.degeneracy = {true, 1 + ceil_div(h.degeneracy().degeneracy, delta), true};
    r.size = {true, ceil_div(h.order(), delta), true};
  }
  if (!pat.is_family() && pat.graph().max_degree() >= 1)
    r.max_degree = {true, bound_maxdeg(h, pat).value, true};
  if (auto b = bound_chromatic(h, pat, deadline))
    r.chromatic_ratio = {true, *b, true};
  for (BoundEntry* e :
       {&r.degeneracy, &r.max_degree, &r.chromatic_ratio, &r.size})
    e->ok = !e->applicable || r.exact <= e->value;
  return r;
}

bool validate_coloring(const Graph& h, const Coloring& c) {
  int n = h.order();
  if (static_cast<int>(c.assignment.size()) != n) return false;
  if (c.k < 0 || (n > 0 && c.k < 1)) return false;
  for (int v = 0; v < n; ++v)
    if (c.assignment[v] < 0 || c.assignment[v] >= c.k) return false;
  for (const Bitset& members : c.classes(n)) {
    if (members.none()) continue;
    if (contains_copy(h.induced(members), c.pattern)) return false;
  }
  return true;
}

}  // namespace gfree
