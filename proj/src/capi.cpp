#include "../include/gfree.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "codec.hpp"
#include "critical.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "graphspec.hpp"
#include "ng.hpp"
#include "report.hpp"
#include "solver.hpp"

struct gfree_graph {
  gfree::Graph g;
};

struct gfree_pattern {
  gfree::PatternSpec p;
};

namespace {

thread_local std::string t_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_json(char** slot, const gfree::Json& j) {
  if (slot != nullptr) *slot = dup_string(j.dump());
}

template <typename Fn>
gfree_status wrap(Fn&& fn) {
  try {
    fn();
    return GFREE_OK;
  } catch (const gfree::ParseError& e) {
    t_error = e.what();
    return GFREE_ERR_PARSE;
  } catch (const gfree::Timeout& e) {
    t_error = e.what();
    return GFREE_ERR_TIMEOUT;
  } catch (const gfree::Unsupported& e) {
    t_error = e.what();
    return GFREE_ERR_UNSUPPORTED;
  } catch (const gfree::InvalidArgument& e) {
    t_error = e.what();
    return GFREE_ERR_INVALID;
  } catch (const std::exception& e) {
    t_error = e.what();
    return GFREE_ERR_INTERNAL;
  } catch (...) {
    t_error = "unknown error";
    return GFREE_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw gfree::InvalidArgument(what);
}

gfree::Deadline deadline_of(long ms) { return gfree::Deadline::in_ms(ms); }

std::vector<gfree::PatternSpec> parse_patterns(const char* const* patterns,
                                               int count) {
  require(patterns != nullptr && count > 0, "at least one pattern required");
  std::vector<gfree::PatternSpec> pats;
  pats.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    require(patterns[i] != nullptr, "null pattern descriptor");
    pats.push_back(gfree::parse_pattern_spec(patterns[i]));
  }
  return pats;
}

}  // namespace

extern "C" {

const char* gfree_version(void) { return "1.0.0"; }

const char* gfree_last_error(void) { return t_error.c_str(); }

void gfree_string_free(char* s) { std::free(s); }

/* ---- graphs ------------------------------------------------------- */

gfree_status gfree_graph_from_spec(const char* spec, gfree_graph** out) {
  return wrap([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = new gfree_graph{gfree::parse_graph_spec(spec)};
  });
}

gfree_status gfree_graph_from_graph6(const char* text, gfree_graph** out) {
  return wrap([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new gfree_graph{gfree::parse_graph6(text)};
  });
}

gfree_status gfree_graph_from_dimacs(const char* text, gfree_graph** out) {
  return wrap([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new gfree_graph{gfree::parse_dimacs(text)};
  });
}

void gfree_graph_free(gfree_graph* g) { delete g; }

int gfree_graph_order(const gfree_graph* g) { return g->g.order(); }

long gfree_graph_size(const gfree_graph* g) { return g->g.size(); }

int gfree_graph_has_edge(const gfree_graph* g, int u, int v) {
  int n = g->g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return 0;
  return g->g.adjacent(u, v) ? 1 : 0;
}

gfree_status gfree_graph_to_graph6(const gfree_graph* g, char** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(gfree::encode_graph6(g->g));
  });
}

gfree_status gfree_graph_degeneracy(const gfree_graph* g, int* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = g->g.degeneracy().degeneracy;
  });
}

gfree_status gfree_graph_complement(const gfree_graph* g, gfree_graph** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new gfree_graph{g->g.complement()};
  });
}

gfree_status gfree_graph_join(const gfree_graph* a, const gfree_graph* b,
                              gfree_graph** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new gfree_graph{gfree::Graph::join(a->g, b->g)};
  });
}

gfree_status gfree_graph_disjoint_union(const gfree_graph* a,
                                        const gfree_graph* b,
                                        gfree_graph** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new gfree_graph{gfree::Graph::disjoint_union(a->g, b->g)};
  });
}

gfree_status gfree_graph_induced(const gfree_graph* g, const int* vertices,
                                 int count, gfree_graph** out) {
  return wrap([&] {
    require(out != nullptr && (vertices != nullptr || count == 0),
            "null argument");
    require(count >= 0, "negative vertex count");
    std::vector<int> keep(vertices, vertices + count);
    *out = new gfree_graph{g->g.induced(keep)};
  });
}

/* ---- patterns ----------------------------------------------------- */

gfree_status gfree_pattern_parse(const char* descriptor,
                                 const gfree_graph* self_graph,
                                 gfree_pattern** out) {
  return wrap([&] {
    require(descriptor != nullptr && out != nullptr, "null argument");
    const gfree::Graph* self = self_graph ? &self_graph->g : nullptr;
    *out = new gfree_pattern{gfree::parse_pattern_spec(descriptor, self)};
  });
}

gfree_status gfree_pattern_set_induced(gfree_pattern* p, int induced) {
  return wrap([&] {
    require(!p->p.is_family(),
            "containment mode applies to single-graph patterns only");
    p->p = gfree::PatternSpec::single(p->p.graph(),
                                      induced ? gfree::ContainMode::Induced
                                              : gfree::ContainMode::Subgraph);
  });
}

int gfree_pattern_min_degree(const gfree_pattern* p) {
  return p->p.min_degree();
}

void gfree_pattern_free(gfree_pattern* p) { delete p; }

/* ---- structure queries -------------------------------------------- */

gfree_status gfree_contains_copy(const gfree_graph* h, const gfree_pattern* p,
                                 int* found) {
  return wrap([&] {
    require(found != nullptr, "null argument");
    *found = gfree::contains_copy(h->g, p->p) ? 1 : 0;
  });
}

gfree_status gfree_clique_number(const gfree_graph* g, int* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = gfree::clique_number(g->g);
  });
}

gfree_status gfree_girth(const gfree_graph* g, int* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = gfree::girth(g->g).value_or(0);
  });
}

/* ---- solving ------------------------------------------------------ */

gfree_status gfree_decide_k(const gfree_graph* h, const gfree_pattern* p,
                            int k, long time_limit_ms, int* feasible,
                            char** coloring_json) {
  return wrap([&] {
    require(feasible != nullptr, "null argument");
    auto got = gfree::decide_k_colorable(h->g, p->p, k, deadline_of(time_limit_ms));
    *feasible = got.has_value() ? 1 : 0;
    if (coloring_json != nullptr)
      *coloring_json = got ? dup_string(gfree::coloring_json(*got).dump())
                           : nullptr;
  });
}

gfree_status gfree_chi(const gfree_graph* h, const gfree_pattern* p,
                       long time_limit_ms, int with_bounds, int* value,
                       char** report_json) {
  return wrap([&] {
    require(value != nullptr, "null argument");
    gfree::Deadline deadline = deadline_of(time_limit_ms);
    if (with_bounds) {
      gfree::BoundReport report = gfree::compute_bounds(h->g, p->p, deadline);
      *value = report.exact;
      emit_json(report_json, gfree::bound_report_json(h->g, report));
      return;
    }
    gfree::ChiResult got = gfree::chi_g_exact(h->g, p->p, deadline);
    *value = got.value;
    if (report_json != nullptr) {
      gfree::Json out;
      out["graph"] = gfree::graph_json(h->g);
      out["pattern"] = p->p.describe();
      out["chi"] = got.value;
      out["witness"] = gfree::coloring_json(got.witness);
      emit_json(report_json, out);
    }
  });
}

gfree_status gfree_greedy_coloring(const gfree_graph* h,
                                   const gfree_pattern* p, int* classes_used,
                                   char** coloring_json) {
  return wrap([&] {
    gfree::Coloring c = gfree::greedy_degeneracy_coloring(h->g, p->p);
    if (classes_used != nullptr) *classes_used = c.k;
    emit_json(coloring_json, gfree::coloring_json(c));
  });
}

gfree_status gfree_lovasz_decompose(const gfree_graph* h, const int* caps,
                                    int k, char** result_json) {
  return wrap([&] {
    require(caps != nullptr && k > 0, "need at least one class cap");
    gfree::DegreeBounds bounds{std::vector<int>(caps, caps + k)};
    gfree::LovaszResult r = gfree::lovasz_decomposition(h->g, bounds);
    emit_json(result_json, gfree::lovasz_json(h->g, bounds, r));
  });
}

gfree_status gfree_critical(const gfree_graph* h, const gfree_pattern* p,
                            long time_limit_ms, char** certificate_json) {
  return wrap([&] {
    gfree::CriticalCertificate cert =
        gfree::extract_critical(h->g, p->p, deadline_of(time_limit_ms));
    emit_json(certificate_json, gfree::certificate_json(cert));
  });
}

gfree_status gfree_subgraph_with_chi(const gfree_graph* h,
                                     const gfree_pattern* p, int target,
                                     long time_limit_ms, gfree_graph** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new gfree_graph{gfree::subgraph_with_chi(
        h->g, p->p, target, deadline_of(time_limit_ms))};
  });
}

/* ---- complement sums ---------------------------------------------- */

gfree_status gfree_ng(const gfree_graph* h, const gfree_pattern* p,
                      long time_limit_ms, char** record_json) {
  return wrap([&] {
    gfree::NGRecord record =
        gfree::ng_sum(h->g, p->p, deadline_of(time_limit_ms));
    emit_json(record_json, gfree::ng_record_json(record));
  });
}

gfree_status gfree_refined_conditions(const gfree_graph* h, int d,
                                      long time_limit_ms,
                                      char** report_json) {
  return wrap([&] {
    gfree::RefinedConditionReport report =
        gfree::check_refined_conditions(h->g, d, deadline_of(time_limit_ms));
    emit_json(report_json, gfree::refined_json(report));
  });
}

gfree_status gfree_witness_suite(long time_limit_ms, int* all_ok,
                                 char** results_json) {
  return wrap([&] {
    auto results = gfree::witness_suite(deadline_of(time_limit_ms));
    if (all_ok != nullptr) {
      *all_ok = 1;
      for (const auto& w : results)
        if (!w.ok) *all_ok = 0;
    }
    emit_json(results_json, gfree::witness_suite_json(results));
  });
}

/* ---- corpus tools -------------------------------------------------- */

gfree_status gfree_enumerate_graph6(int n, char** lines) {
  return wrap([&] {
    require(lines != nullptr, "null argument");
    std::string text;
    for (const gfree::Graph& g : gfree::enumerate_small_graphs(n)) {
      text += gfree::encode_graph6(g);
      text += '\n';
    }
    *lines = dup_string(text);
  });
}

static gfree_status run_verify(std::vector<gfree::Graph> corpus,
                               const char* const* patterns, int pattern_count,
                               int jobs, long time_limit_ms,
                               long* violation_count, char** report_json) {
  return wrap([&] {
    auto pats = parse_patterns(patterns, pattern_count);
    gfree::VerifyOptions opts;
    opts.jobs = jobs > 1 ? jobs : 1;
    opts.time_limit_ms = time_limit_ms;
    gfree::VerifyReport report =
        gfree::verify_corpus(std::move(corpus), pats, opts);
    if (violation_count != nullptr)
      *violation_count = static_cast<long>(report.violations.size());
    emit_json(report_json, gfree::verify_json(report));
  });
}

gfree_status gfree_verify_graph6(const char* text,
                                 const char* const* patterns,
                                 int pattern_count, int jobs,
                                 long time_limit_ms, long* violation_count,
                                 char** report_json) {
  return wrap([&] {
    require(text != nullptr, "null corpus text");
    auto pats = parse_patterns(patterns, pattern_count);
    gfree::VerifyOptions opts;
    opts.jobs = jobs > 1 ? jobs : 1;
    opts.time_limit_ms = time_limit_ms;
    gfree::VerifyReport report = gfree::verify_graph6_text(text, pats, opts);
    if (violation_count != nullptr)
      *violation_count = static_cast<long>(report.violations.size());
    emit_json(report_json, gfree::verify_json(report));
  });
}

gfree_status gfree_verify_enumerated(int max_n, const char* const* patterns,
                                     int pattern_count, int jobs,
                                     long time_limit_ms,
                                     long* violation_count,
                                     char** report_json) {
  gfree_status built = GFREE_OK;
  std::vector<gfree::Graph> corpus;
  built = wrap([&] {
    require(max_n >= 0, "corpus order must be nonnegative");
    for (int n = 0; n <= max_n; ++n)
      for (gfree::Graph& g : gfree::enumerate_small_graphs(n))
        corpus.push_back(std::move(g));
  });
  if (built != GFREE_OK) return built;
  return run_verify(std::move(corpus), patterns, pattern_count, jobs,
                    time_limit_ms, violation_count, report_json);
}

}  // extern "C"
