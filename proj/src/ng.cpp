#include "ng.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "codec.hpp"
#include "critical.hpp"
#include "errors.hpp"
#include "solver.hpp"

namespace gfree {

const char* ng_branch_name(NgBranch b) {
  switch (b) {
    case NgBranch::FamilyPlusOne: return "plus1_family";
    case NgBranch::TwoRegularPlusOne: return "plus1_two_regular";
    case NgBranch::CompletePlusOne: return "plus1_complete";
    case NgBranch::CriticalPlusOne: return "plus1_critical";
    case NgBranch::RefinedPlusOne: return "plus1_refined";
    case NgBranch::GeneralPlusTwo: return "plus2_general";
    case NgBranch::None: return "none";
  }
  return "unknown";
}

namespace {

bool is_two_regular(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_complete(const Graph& g) {
  return g.size() == static_cast<long>(g.order()) * (g.order() - 1) / 2;
}

}  // namespace

RefinedConditionReport check_refined_conditions(const Graph& h, int d,
                                                const Deadline& deadline) {
  RefinedConditionReport r;
  int n = h.order();
  if (d < 3 || n % d != 0 || n / d < 3) return r;  // not applicable
  r.applicable = true;
  r.d = d;
  r.k = n / d;
  PatternSpec pat = PatternSpec::single(complete_graph(d + 1));
  Graph hc = h.complement();
  r.cond_critical =
      is_critical(h, pat, deadline) || is_critical(hc, pat, deadline);
  if (n <= 14) {
    r.subsets_checked = true;
    int s = 2 * d;
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
      deadline.tick("check_refined_conditions");
      Graph a = h.induced(pick);
      Graph b = hc.induced(pick);
      if (!r.cond_free_pair_subset && clique_number(a) <= d &&
          clique_number(b) <= d)
        r.cond_free_pair_subset = true;
      if (!r.cond_girth_subset) {
        auto ga = girth(a);
        auto gb = girth(b);
        if ((ga && *ga == s) || (gb && *gb == s)) r.cond_girth_subset = true;
      }
      if (r.cond_free_pair_subset && r.cond_girth_subset) break;
      // next combination
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  r.any = r.cond_critical || r.cond_free_pair_subset || r.cond_girth_subset;
  r.bound = r.k + (r.any ? 1 : 2);
  return r;
}

NGRecord ng_sum(const Graph& h, const PatternSpec& pat,
                const Deadline& deadline) {
  NGRecord r;
  r.graph6 = encode_graph6(h);
  r.pattern = pat.describe();
  r.n = h.order();
  Graph hc = h.complement();
  r.chi = chi_g_exact(h, pat, deadline).value;
  r.chi_complement = chi_g_exact(hc, pat, deadline).value;
  r.sum = r.chi + r.chi_complement;

  int delta = pat.min_degree();
  if (pat.is_family()) {
    r.branch = NgBranch::FamilyPlusOne;
    r.bound = ceil_div(r.n, 2) + 1;
  } else if (delta < 1) {
    r.branch = NgBranch::None;
  } else if (is_two_regular(pat.graph())) {
    r.branch = NgBranch::TwoRegularPlusOne;
    r.bound = ceil_div(r.n, 2) + 1;
  } else if (is_complete(pat.graph())) {
    if (delta >= 3 && r.n % delta == 0 && r.n / delta >= 3) {
      RefinedConditionReport rc = check_refined_conditions(h, delta, deadline);
      r.refined = rc;
      r.branch = rc.any ? NgBranch::RefinedPlusOne : NgBranch::GeneralPlusTwo;
      r.bound = rc.bound;
    } else {
      r.branch = NgBranch::CompletePlusOne;
      r.bound = ceil_div(r.n, delta) + 1;
    }
  } else if (is_critical(h, pat, deadline) ||
             is_critical(hc, pat, deadline)) {
    r.branch = NgBranch::CriticalPlusOne;
    r.bound = ceil_div(r.n, delta) + 1;
  } else {
    r.branch = NgBranch::GeneralPlusTwo;
    r.bound = ceil_div(r.n, delta) + 2;
  }
  if (r.branch != NgBranch::None) {
    r.slack = r.bound - r.sum;
    r.sharp = r.slack == 0;
    r.bound_ok = r.slack >= 0;
  }
  return r;
}

std::vector<WitnessResult> witness_suite(const Deadline& deadline) {
  struct Entry {
    std::string name;
    Graph h;
    PatternSpec pat;
    int chi;
    int chi_complement;
  };
  Graph k44 = complete_bipartite(4, 4);
  Graph c5 = cycle_graph(5);
  std::vector<Entry> entries;
  entries.push_back({"K4,4 against itself", k44, PatternSpec::single(k44), 2, 1});
  entries.push_back({"C5 against itself", c5, PatternSpec::single(c5), 2, 2});
  entries.push_back({"K6+4K1 against K4",
                     Graph::join(complete_graph(6), empty_graph(4)),
                     PatternSpec::single(complete_graph(4)), 3, 2});
  entries.push_back({"K8+5K1 against K5",
                     Graph::join(complete_graph(8), empty_graph(5)),
                     PatternSpec::single(complete_graph(5)), 3, 2});
  entries.push_back({"K9+4K1 against K4",
                     Graph::join(complete_graph(9), empty_graph(4)),
                     PatternSpec::single(complete_graph(4)), 4, 2});
  entries.push_back({"K3+3K1 against K3",
                     Graph::join(complete_graph(3), empty_graph(3)),
                     PatternSpec::single(complete_graph(3)), 2, 2});

  std::vector<WitnessResult> out;
  out.reserve(entries.size());
  for (Entry& e : entries) {
    WitnessResult w;
    w.name = e.name;
    w.expected_chi = e.chi;
    w.expected_chi_complement = e.chi_complement;
    w.expected_sum = e.chi + e.chi_complement;
    w.record = ng_sum(e.h, e.pat, deadline);
    w.ok = w.record.chi == w.expected_chi &&
           w.record.chi_complement == w.expected_chi_complement &&
           w.record.bound_ok && w.record.sharp;
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

struct PairOutcome {
  NGRecord record;
  std::vector<Violation> violations;
  std::vector<Violation> ratio_violations;
};

PairOutcome audit_pair(const Graph& g, const std::string& g6,
                       const PatternSpec& pat, long time_limit_ms) {
  Deadline dl =
      time_limit_ms > 0 ? Deadline::in_ms(time_limit_ms) : Deadline();
  PairOutcome out;
  std::string pname = pat.describe();
  auto violate = [&](const char* check, std::string detail) {
    out.violations.push_back({g6, pname, check, std::move(detail)});
  };
  auto exceeded = [](const char* what, int value, int bound) {
    return std::string(what) + " gives " + std::to_string(value) +
           " above its bound " + std::to_string(bound);
  };

  BoundReport br = compute_bounds(g, pat, dl);
  if (!validate_coloring(g, br.witness))
    violate("witness", "optimal coloring failed independent validation");
  if (!br.degeneracy.ok)
    violate("degeneracy_bound",
            exceeded("exact value", br.exact, br.degeneracy.value));
  if (!br.max_degree.ok)
    violate("max_degree_bound",
            exceeded("exact value", br.exact, br.max_degree.value));
  if (!br.size.ok)
    violate("size_bound", exceeded("exact value", br.exact, br.size.value));
  if (!br.chromatic_ratio.ok)
    out.ratio_violations.push_back(
        {g6, pname, "chromatic_ratio_bound",
         exceeded("exact value", br.exact, br.chromatic_ratio.value)});

  CriticalCertificate cert = extract_critical(g, pat, dl);
  if (cert.k != br.exact)
    violate("critical_core", "core chi " + std::to_string(cert.k) +
                                 " differs from host chi " +
                                 std::to_string(br.exact));
  if (!cert.mindeg_ok)
    violate("critical_min_degree",
            "core min degree " + std::to_string(cert.min_degree) +
                " below required " +
                std::to_string(cert.min_degree_required));
  for (std::size_t i = 0; i < cert.vertex_evidence.size(); ++i)
    if (cert.vertex_evidence[i] != cert.k - 1)
      violate("criticality", "deleting vertex " +
                                 std::to_string(cert.core.vertices[i]) +
                                 " leaves chi " +
                                 std::to_string(cert.vertex_evidence[i]));
  for (std::size_t i = 0; i < cert.edge_evidence.size(); ++i)
    if (cert.edge_evidence[i] != cert.k - 1)
      violate("criticality",
              "deleting edge (" + std::to_string(cert.core.edges[i].first) +
                  "," + std::to_string(cert.core.edges[i].second) +
                  ") leaves chi " + std::to_string(cert.edge_evidence[i]));

  NGRecord rec = ng_sum(g, pat, dl);
  if (!rec.bound_ok)
    violate("ng_branch_bound",
            exceeded(ng_branch_name(rec.branch), rec.sum, rec.bound));
  int delta = pat.min_degree();
  if (delta >= 1 && rec.sum > ceil_div(rec.n, delta) + 2)
    violate("ng_general_bound",
            exceeded("complement sum", rec.sum,
                     ceil_div(rec.n, delta) + 2));
  if (rec.n >= 1 && rec.sum < 2)
    violate("ng_lower", "complement sum below 2 on a nonempty graph");
  out.record = std::move(rec);
  return out;
}

}  // namespace

VerifyReport verify_corpus(std::vector<Graph> graphs,
                           const std::vector<PatternSpec>& pats,
                           const VerifyOptions& opts) {
  std::vector<std::string> g6s;
  g6s.reserve(graphs.size());
  for (const Graph& g : graphs) g6s.push_back(encode_graph6(g));
  std::vector<int> graph_order(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    graph_order[i] = static_cast<int>(i);
  std::stable_sort(graph_order.begin(), graph_order.end(),
                   [&](int a, int b) { return g6s[a] < g6s[b]; });
  std::vector<int> pat_order(pats.size());
  for (std::size_t i = 0; i < pats.size(); ++i)
    pat_order[i] = static_cast<int>(i);
  std::stable_sort(pat_order.begin(), pat_order.end(), [&](int a, int b) {
    return pats[a].describe() < pats[b].describe();
  });

  struct Item {
    int gi;
    int pi;
  };
  std::vector<Item> items;
  items.reserve(graphs.size() * pats.size());
  for (int gi : graph_order)
    for (int pi : pat_order) items.push_back({gi, pi});

  std::vector<PairOutcome> outcomes(items.size());
  auto run_item = [&](std::size_t i) {
    outcomes[i] = audit_pair(graphs[items[i].gi], g6s[items[i].gi],
                             pats[items[i].pi], opts.time_limit_ms);
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs <= 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) run_item(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size() || failed.load()) return;
        try {
          run_item(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    int nthreads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), items.size()));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  VerifyReport report;
  report.graphs = static_cast<long>(graphs.size());
  report.pairs = static_cast<long>(items.size());
  for (PairOutcome& out : outcomes) {
    for (Violation& v : out.violations)
      report.violations.push_back(std::move(v));
    for (Violation& v : out.ratio_violations)
      report.ratio_violations.push_back(std::move(v));
    if (out.record.branch != NgBranch::None) {
      if (out.record.sharp) ++report.sharp_count;
      report.max_slack = std::max(report.max_slack, out.record.slack);
    }
    report.records.push_back(std::move(out.record));
  }
  return report;
}

VerifyReport verify_graph6_text(std::string_view text,
                                const std::vector<PatternSpec>& pats,
                                const VerifyOptions& opts) {
  std::vector<std::string> warnings;
  std::vector<Graph> graphs = parse_graph6_lines(text, &warnings);
  VerifyReport report = verify_corpus(std::move(graphs), pats, opts);
  report.warnings.insert(report.warnings.begin(), warnings.begin(),
                         warnings.end());
  return report;
}

}  // namespace gfree
