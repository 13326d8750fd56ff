#pragma once

#include <optional>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "pattern.hpp"

namespace gfree {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Coloring {
  int k = 0;
  std::vector<int> assignment;  // vertex -> color in 0..k-1
  PatternSpec pattern;
  std::vector<Bitset> classes(int n) const;
};

// Is there a pattern-free k-coloring? First witness under the canonical
// search order (reverse peel order, lowest color first) when yes.
std::optional<Coloring> decide_k_colorable(const Graph& h,
                                           const PatternSpec& pat, int k,
                                           const Deadline& deadline = {});

struct ChiResult {
  int value = 0;
  Coloring witness;
};

ChiResult chi_g_exact(const Graph& h, const PatternSpec& pat,
                      const Deadline& deadline = {});

// convenience: ordinary chromatic number (pattern K2)
int chromatic_number(const Graph& g, const Deadline& deadline = {});

// First-fit over reverse peel order; never needs more than
// 1 + ceil(degeneracy / pattern delta) classes.
Coloring greedy_degeneracy_coloring(const Graph& h, const PatternSpec& pat);

struct DegreeBounds {
  std::vector<int> d;  // one cap per class
};

struct LovaszResult {
  std::vector<Bitset> classes;
  std::vector<long> potentials;  // initial value, then one entry per move
};

// Partition V(h) into |d| classes with max inside-degree of class i at most
// d[i]. Needs sum(d) >= maxdeg(h) - |d| + 1; local search on the potential
// sum_i (e(V_i) - d_i |V_i|), which every move strictly decreases.
LovaszResult lovasz_decomposition(const Graph& h, const DegreeBounds& bounds);

struct MaxDegBound {
  int value = 0;
  Coloring certificate;
};

// ceil((maxdeg(h)+1) / maxdeg(G)) classes, constructed via the decomposition
// with per-class cap maxdeg(G)-1; such classes cannot host a copy of G.
MaxDegBound bound_maxdeg(const Graph& h, const PatternSpec& pat);

// ceil(chi(h) / (chi(G)-1)); empty when chi(G) < 2. Audited, not assumed.
std::optional<int> bound_chromatic(const Graph& h, const PatternSpec& pat,
                                   const Deadline& deadline = {});

struct BoundEntry {
  bool applicable = false;
  int value = 0;
  bool ok = true;  // exact <= value whenever applicable
};

struct BoundReport {
  int exact = 0;
  BoundEntry degeneracy;       // 1 + ceil(degeneracy / delta)
  BoundEntry max_degree;       // ceil((maxdeg+1) / maxdeg(G))
  BoundEntry chromatic_ratio;  // ceil(chi / (chi(G)-1)), unproved
  BoundEntry size;             // ceil(n / delta)
  Coloring witness;
};

BoundReport compute_bounds(const Graph& h, const PatternSpec& pat,
                           const Deadline& deadline = {});

// Independent of the solver's incremental bookkeeping: checks shape and
// runs contains_copy on every class.
bool validate_coloring(const Graph& h, const Coloring& c);

}  // namespace gfree
