// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria 3, 4, and 6 share one exhaustive n <= 7 sweep.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "codec.hpp"
#include "critical.hpp"
#include "enumerate.hpp"
#include "ng.hpp"
#include "solver.hpp"
#include "testutil.hpp"

using gfree::Graph;
using gfree::PatternSpec;
using Clock = std::chrono::steady_clock;

namespace {

bool g_all_pass = true;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", number,
              detail.c_str());
  std::fflush(stdout);
  g_all_pass = g_all_pass && pass;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct NamedPattern {
  PatternSpec pat;
  oracle::ForbidSpec forbid;
};

std::vector<NamedPattern> the_six_patterns() {
  std::vector<NamedPattern> out;
  for (int k : {2, 3, 4})
    out.push_back({PatternSpec::single(gfree::complete_graph(k)),
                   oracle::forbid_graph(gfree::complete_graph(k))});
  for (int c : {4, 5})
    out.push_back({PatternSpec::single(gfree::cycle_graph(c)),
                   oracle::forbid_graph(gfree::cycle_graph(c))});
  out.push_back({PatternSpec::all_two_regular(), oracle::forbid_cycles()});
  return out;
}

std::vector<Graph> corpus_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n)
    for (Graph& g : gfree::enumerate_small_graphs(n))
      out.push_back(std::move(g));
  return out;
}

// ---- criterion 1: the published sharpness table ------------------------

void criterion_sharpness() {
  auto start = Clock::now();
  struct Row {
    Graph host;
    Graph pattern;
    int chi, chi_co, delta;
  };
  std::vector<Row> rows;
  rows.push_back({gfree::complete_bipartite(4, 4),
                  gfree::complete_bipartite(4, 4), 2, 1, 4});
  rows.push_back({gfree::cycle_graph(5), gfree::cycle_graph(5), 2, 2, 2});
  rows.push_back({Graph::join(gfree::complete_graph(3), gfree::empty_graph(3)),
                  gfree::complete_graph(3), 2, 2, 2});
  rows.push_back({Graph::join(gfree::complete_graph(6), gfree::empty_graph(4)),
                  gfree::complete_graph(4), 3, 2, 3});

  int checked = 0, wrong = 0;
  std::ostringstream what;
  for (const Row& r : rows) {
    PatternSpec pat = PatternSpec::single(r.pattern);
    int a = gfree::chi_g_exact(r.host, pat).value;
    int b = gfree::chi_g_exact(r.host.complement(), pat).value;
    int bound = gfree::ceil_div(r.host.order(), r.delta) + 1;
    checked += 2;
    if (a != r.chi || b != r.chi_co || a + b != bound) {
      ++wrong;
      what << " [" << r.host.name() << "/" << r.pattern.name() << " got "
           << a << "+" << b << ", wanted " << r.chi << "+" << r.chi_co
           << " = " << bound << "]";
    }
  }
  double took = seconds_since(start);
  bool pass = wrong == 0 && took < 1.0;
  std::ostringstream detail;
  detail << "sharpness table: " << checked
         << " exact values, each sum meeting its bound with equality, "
         << fmt(took);
  if (wrong > 0) detail << ", " << wrong << " rows wrong:" << what.str();
  if (took >= 1.0) detail << " (over the 1s budget)";
  report(1, pass, detail.str());
}

// ---- criterion 2: solver vs partition oracle, n <= 6 -------------------

void criterion_oracle() {
  auto start = Clock::now();
  auto pats = the_six_patterns();
  long done = 0, mismatches = 0;
  std::ostringstream first;
  for (const Graph& h : corpus_up_to(6)) {
    for (const NamedPattern& np : pats) {
      int fast = gfree::chi_g_exact(h, np.pat).value;
      int slow = oracle::brute_chi(h, np.forbid);
      ++done;
      if (fast != slow) {
        if (mismatches == 0)
          first << " first: " << gfree::encode_graph6(h) << "/"
                << np.pat.describe() << " solver " << fast << " oracle "
                << slow;
        ++mismatches;
      }
    }
  }
  double took = seconds_since(start);
  bool pass = mismatches == 0 && took < 300.0;
  std::ostringstream detail;
  detail << "exact solver vs all-partitions oracle: " << done
         << " (graph, pattern) pairs at n <= 6, " << mismatches
         << " mismatches, " << fmt(took);
  detail << first.str();
  report(2, pass, detail.str());
}

// ---- criteria 3, 4, 6: one exhaustive n <= 7 sweep ----------------------

void criterion_audit(const std::vector<Graph>& corpus,
                     const std::vector<PatternSpec>& specs) {
  auto start3 = Clock::now();
  gfree::VerifyReport audit = gfree::verify_corpus(corpus, specs, {});
  double took3 = seconds_since(start3);
  {
    bool pass = audit.violations.empty() && audit.pairs ==
        static_cast<long>(corpus.size() * specs.size());
    std::ostringstream detail;
    detail << "exhaustive audit at n <= 7: " << audit.graphs << " graphs, "
           << audit.pairs << " pairs, " << audit.violations.size()
           << " violations of proved bounds, " << audit.ratio_violations.size()
           << " chromatic-ratio reports (report-only), " << fmt(took3);
    for (size_t i = 0; i < audit.violations.size() && i < 3; ++i)
      detail << " [" << audit.violations[i].check << " "
             << audit.violations[i].graph6 << "/"
             << audit.violations[i].pattern << ": "
             << audit.violations[i].detail << "]";
    report(3, pass, detail.str());
    for (const auto& v : audit.ratio_violations)
      std::printf("       note: ratio bound exceeded on %s / %s: %s\n",
                  v.graph6.c_str(), v.pattern.c_str(), v.detail.c_str());
  }
}

// criterion 4: K2 recovers the ordinary chromatic number, and the
// classic complement-sum bound follows
void criterion_k2(const std::vector<Graph>& corpus) {
  auto start4 = Clock::now();
  PatternSpec k2 = PatternSpec::single(gfree::complete_graph(2));
  long checked = 0, wrong = 0, ng_broken = 0;
  for (const Graph& h : corpus) {
    int fast = gfree::chi_g_exact(h, k2).value;
    if (fast != oracle::ref_chromatic(h)) ++wrong;
    int co = gfree::chi_g_exact(h.complement(), k2).value;
    if (fast + co > h.order() + 1) ++ng_broken;
    ++checked;
  }
  double took4 = seconds_since(start4);
  {
    bool pass = wrong == 0 && ng_broken == 0;
    std::ostringstream detail;
    detail << "K2 specialization: " << checked
           << " graphs at n <= 7, chi matches the independent reference on "
              "all, "
           << "classic chi(H)+chi(co-H) <= n+1 holds on all (" << wrong
           << " chi mismatches, " << ng_broken << " sum breaches), "
           << fmt(took4);
    report(4, pass, detail.str());
  }
}

// criterion 6: every certificate survives a from-scratch deletion audit
void criterion_criticality(const std::vector<Graph>& corpus,
                           const std::vector<PatternSpec>& specs) {
  auto start6 = Clock::now();
  long certificates = 0, elements = 0, failures = 0;
  std::ostringstream first;
  for (const Graph& h : corpus) {
    for (const PatternSpec& pat : specs) {
      gfree::CriticalCertificate cert = gfree::extract_critical(h, pat);
      if (cert.core_graph.order() > 8) continue;  // always false at n <= 7
      ++certificates;
      int want = cert.k - 1;
      bool bad = false;
      for (int v = 0; v < cert.core_graph.order(); ++v) {
        ++elements;
        if (gfree::chi_g_exact(cert.core_graph.without_vertex(v), pat).value !=
            want)
          bad = true;
      }
      for (const auto& [u, v] : cert.core_graph.edges()) {
        ++elements;
        if (gfree::chi_g_exact(cert.core_graph.without_edge(u, v), pat)
                .value != want)
          bad = true;
      }
      if (bad) {
        if (failures == 0)
          first << " first: " << gfree::encode_graph6(h) << "/"
                << pat.describe();
        ++failures;
      }
    }
  }
  double took6 = seconds_since(start6);
  {
    bool pass = failures == 0;
    std::ostringstream detail;
    detail << "criticality recomputation: " << certificates
           << " extracted cores, " << elements
           << " single-element deletions each dropping chi by exactly one, "
           << failures << " failures, " << fmt(took6);
    detail << first.str();
    report(6, pass, detail.str());
  }
}

// ---- criterion 5: bounded-degree decomposition property test -----------

void criterion_lovasz() {
  auto start = Clock::now();
  std::mt19937_64 rng(20260821);
  long bad_caps = 0, bad_potential = 0;
  for (int round = 0; round < 1000; ++round) {
    int n = 1 + static_cast<int>(rng() % 20);
    double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    Graph h = oracle::random_graph(n, p, rng);
    int k = 1 + static_cast<int>(rng() % 4);
    gfree::DegreeBounds bounds;
    bounds.d.assign(k, 0);
    int left = std::max(0, h.max_degree() - k + 1);
    for (int i = 0; i < k; ++i) {
      int give =
          i + 1 == k ? left : static_cast<int>(rng() % (left + 1));
      bounds.d[i] = give + static_cast<int>(rng() % 2);
      left -= give;
    }
    gfree::LovaszResult got = gfree::lovasz_decomposition(h, bounds);
    for (int i = 0; i < k; ++i)
      got.classes[i].for_each([&](int v) {
        if (h.neighbors(v).count_and(got.classes[i]) > bounds.d[i]) ++bad_caps;
      });
    for (size_t t = 1; t < got.potentials.size(); ++t)
      if (got.potentials[t] >= got.potentials[t - 1]) ++bad_potential;
  }
  double took = seconds_since(start);
  bool pass = bad_caps == 0 && bad_potential == 0 && took < 30.0;
  std::ostringstream detail;
  detail << "bounded-degree decomposition on 1000 random instances at n <= "
            "20: "
         << bad_caps << " cap breaches, " << bad_potential
         << " non-decreasing potential steps, " << fmt(took);
  if (took >= 30.0) detail << " (over the 30s budget)";
  report(5, pass, detail.str());
}

// ---- criterion 7: graph6 codec bit-exactness ---------------------------

void criterion_codec() {
  auto start = Clock::now();
  long corpus_checked = 0, corpus_bad = 0;
  for (const Graph& g : corpus_up_to(7)) {
    std::string enc = gfree::encode_graph6(g);
    ++corpus_checked;
    if (!(gfree::parse_graph6(enc) == g) ||
        !oracle::same_graph(g, oracle::ref_decode_graph6(enc)))
      ++corpus_bad;
  }
  std::mt19937_64 rng(7777);
  long random_checked = 0, random_bad = 0;
  for (int round = 0; round < 1000; ++round) {
    // sprinkle in the long-header regime every eighth graph
    int n = (round % 8 == 7) ? 63 + static_cast<int>(rng() % 20)
                             : 1 + static_cast<int>(rng() % 45);
    double p = 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = oracle::random_graph(n, p, rng);
    std::string enc = gfree::encode_graph6(g);
    ++random_checked;
    if (!(gfree::parse_graph6(enc) == g) ||
        !oracle::same_graph(g, oracle::ref_decode_graph6(enc)))
      ++random_bad;
  }
  double took = seconds_since(start);
  bool pass = corpus_bad == 0 && random_bad == 0;
  std::ostringstream detail;
  detail << "graph6 codec: " << corpus_checked
         << " enumerated classes round-tripped, " << random_checked
         << " random graphs agree with the reference decoder (" << corpus_bad
         << " + " << random_bad << " discrepancies), " << fmt(took);
  report(7, pass, detail.str());
}

}  // namespace

int main() {
  std::vector<PatternSpec> specs;
  for (const NamedPattern& np : the_six_patterns()) specs.push_back(np.pat);
  std::vector<Graph> corpus = corpus_up_to(7);

  criterion_sharpness();
  criterion_oracle();
  criterion_audit(corpus, specs);
  criterion_k2(corpus);
  criterion_lovasz();
  criterion_criticality(corpus, specs);
  criterion_codec();
  std::printf("%s\n", g_all_pass ? "acceptance: all criteria pass"
                                 : "acceptance: FAILURES above");
  return g_all_pass ? 0 : 1;
}
