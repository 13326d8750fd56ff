#include "report.hpp"

#include <algorithm>

#include "codec.hpp"

namespace gfree {
namespace {

Json subgraph_edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back(Json::array({u, v}));
  return out;
}

Json bound_entry_json(const BoundEntry& e) {
  Json out;
  out["applicable"] = e.applicable;
  if (e.applicable) {
    out["value"] = e.value;
    out["ok"] = e.ok;
  }
  return out;
}

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs)
    out.push_back({{"graph6", v.graph6},
                   {"pattern", v.pattern},
                   {"check", v.check},
                   {"detail", v.detail}});
  return out;
}

}  // namespace

Json graph_json(const Graph& g) {
  Json out;
  if (!g.name().empty()) out["name"] = g.name();
  out["n"] = g.order();
  out["m"] = g.size();
  out["graph6"] = encode_graph6(g);
  return out;
}

Json coloring_json(const Coloring& c) {
  int n = static_cast<int>(c.assignment.size());
  Json classes = Json::array();
  for (const Bitset& cls : c.classes(n)) classes.push_back(cls.to_vector());
  return Json{{"k", c.k},
              {"assignment", c.assignment},
              {"classes", std::move(classes)}};
}

Json bound_report_json(const Graph& g, const BoundReport& r) {
  Json out;
  out["graph"] = graph_json(g);
  out["pattern"] = r.witness.pattern.describe();
  out["chi"] = r.exact;
  out["bounds"] = {{"size", bound_entry_json(r.size)},
                   {"degeneracy", bound_entry_json(r.degeneracy)},
                   {"max_degree", bound_entry_json(r.max_degree)},
                   {"chromatic_ratio", bound_entry_json(r.chromatic_ratio)}};
  out["witness"] = coloring_json(r.witness);
  return out;
}

Json lovasz_json(const Graph& g, const DegreeBounds& bounds,
                 const LovaszResult& r) {
  Json classes = Json::array();
  Json inside = Json::array();
  for (const Bitset& cls : r.classes) {
    classes.push_back(cls.to_vector());
    int worst = 0;
    cls.for_each([&](int v) {
      worst = std::max(worst, g.neighbors(v).count_and(cls));
    });
    inside.push_back(worst);
  }
  Json out;
  out["n"] = g.order();
  out["caps"] = bounds.d;
  out["classes"] = std::move(classes);
  out["max_inside_degree"] = std::move(inside);
  out["moves"] = static_cast<long>(r.potentials.size()) - 1;
  out["potentials"] = r.potentials;
  return out;
}

Json certificate_json(const CriticalCertificate& c) {
  Json out;
  out["k"] = c.k;
  out["vertices"] = c.core.vertices;
  out["edges"] = subgraph_edges_json(c.core.edges);
  out["vertex_evidence"] = c.vertex_evidence;
  out["edge_evidence"] = c.edge_evidence;
  out["min_degree"] = c.min_degree;
  out["min_degree_required"] = c.min_degree_required;
  out["min_degree_ok"] = c.mindeg_ok;
  out["is_whole_graph"] = c.is_whole_graph;
  out["core"] = graph_json(c.core_graph);
  return out;
}

Json refined_json(const RefinedConditionReport& r) {
  Json out;
  out["applicable"] = r.applicable;
  if (!r.applicable) return out;
  out["k"] = r.k;
  out["d"] = r.d;
  out["critical_side"] = r.cond_critical;
  out["free_pair_subset"] = r.cond_free_pair_subset;
  out["girth_subset"] = r.cond_girth_subset;
  out["subsets_checked"] = r.subsets_checked;
  out["any"] = r.any;
  out["bound"] = r.bound;
  return out;
}

Json ng_record_json(const NGRecord& r) {
  Json out;
  out["graph6"] = r.graph6;
  out["pattern"] = r.pattern;
  out["n"] = r.n;
  out["chi"] = r.chi;
  out["chi_complement"] = r.chi_complement;
  out["sum"] = r.sum;
  out["branch"] = ng_branch_name(r.branch);
  if (r.branch != NgBranch::None) {
    out["bound"] = r.bound;
    out["slack"] = r.slack;
    out["sharp"] = r.sharp;
    out["bound_ok"] = r.bound_ok;
  }
  if (r.refined) out["refined"] = refined_json(*r.refined);
  return out;
}

Json witness_suite_json(const std::vector<WitnessResult>& results) {
  bool all_ok = true;
  Json rows = Json::array();
  for (const auto& w : results) {
    all_ok = all_ok && w.ok;
    rows.push_back({{"name", w.name},
                    {"expected_chi", w.expected_chi},
                    {"expected_chi_complement", w.expected_chi_complement},
                    {"expected_sum", w.expected_sum},
                    {"ok", w.ok},
                    {"record", ng_record_json(w.record)}});
  }
  return Json{{"all_ok", all_ok}, {"results", std::move(rows)}};
}

Json verify_json(const VerifyReport& r) {
  Json sharp = Json::array();
  Json records = Json::array();
  for (const NGRecord& rec : r.records) {
    Json row = ng_record_json(rec);
    if (rec.sharp) sharp.push_back(row);
    records.push_back(std::move(row));
  }
  Json out;
  out["summary"] = {{"graphs", r.graphs},
                    {"pairs", r.pairs},
                    {"violations", r.violations.size()},
                    {"chromatic_ratio_violations", r.ratio_violations.size()},
                    {"sharp", r.sharp_count},
                    {"max_slack", r.max_slack},
                    {"warnings", r.warnings.size()}};
  out["violations"] = violations_json(r.violations);
  out["chromatic_ratio_violations"] = violations_json(r.ratio_violations);
  out["sharp"] = std::move(sharp);
  out["records"] = std::move(records);
  out["warnings"] = r.warnings;
  return out;
}

}  // namespace gfree
