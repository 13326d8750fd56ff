// gfree: command-line front end over the shared library.
//
// Exit codes: 0 success, 1 usage or input error, 2 a proved inequality
// failed to hold (or a witness missed its published value), 3 timeout.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfree.h"

namespace {

using Json = nlohmann::ordered_json;

struct Exit {
  int code;
};

struct CStr {
  char* p = nullptr;
  ~CStr() { gfree_string_free(p); }
  std::string str() const { return p != nullptr ? std::string(p) : std::string(); }
};

struct GraphPtr {
  gfree_graph* g = nullptr;
  ~GraphPtr() { gfree_graph_free(g); }
};

struct PatternPtr {
  gfree_pattern* p = nullptr;
  ~PatternPtr() { gfree_pattern_free(p); }
};

[[noreturn]] void die(gfree_status status) {
  std::cerr << "error: " << gfree_last_error() << "\n";
  throw Exit{status == GFREE_ERR_TIMEOUT ? 3 : 1};
}

void need(gfree_status status) {
  if (status != GFREE_OK) die(status);
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Exit{1};
}

struct Common {
  std::string graph_spec;
  std::string input_path;
  std::string pattern;
  std::string format = "text";
  double time_limit = 0;  // seconds
  bool induced = false;

  long limit_ms() const {
    if (time_limit <= 0) return 0;
    long ms = static_cast<long>(time_limit * 1000.0);
    return ms > 0 ? ms : 1;  // a tiny budget still counts as a budget
  }
  bool json() const { return format == "json"; }
};

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream file(path);
  if (!file) usage_error("cannot open " + path);
  return read_stream(file);
}

bool looks_like_dimacs(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i >= text.size()) return false;
  char head = text[i];
  if (head != 'c' && head != 'p') return false;
  ++i;
  return i >= text.size() || std::isspace(static_cast<unsigned char>(text[i]));
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// --graph takes a spec; --input takes a file ("-" for stdin) holding either
// one graph6 line or a DIMACS edge list.
GraphPtr load_graph(const Common& cfg) {
  GraphPtr out;
  if (!cfg.graph_spec.empty()) {
    need(gfree_graph_from_spec(cfg.graph_spec.c_str(), &out.g));
    return out;
  }
  if (cfg.input_path.empty()) usage_error("need --graph or --input");
  std::string text = read_input(cfg.input_path);
  if (looks_like_dimacs(text)) {
    need(gfree_graph_from_dimacs(text.c_str(), &out.g));
    return out;
  }
  std::vector<std::string> lines = nonempty_lines(text);
  if (lines.empty()) usage_error("no graph in " + cfg.input_path);
  if (lines.size() > 1)
    usage_error("input holds " + std::to_string(lines.size()) +
                " graphs; this command takes one");
  need(gfree_graph_from_graph6(lines[0].c_str(), &out.g));
  return out;
}

PatternPtr load_pattern(const Common& cfg, const gfree_graph* self) {
  if (cfg.pattern.empty()) usage_error("need --pattern");
  PatternPtr out;
  need(gfree_pattern_parse(cfg.pattern.c_str(), self, &out.p));
  if (cfg.induced) need(gfree_pattern_set_induced(out.p, 1));
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string classes_text(const Json& coloring) {
  std::string out;
  for (const Json& cls : coloring.at("classes")) {
    out += out.empty() ? "{" : " {";
    bool first = true;
    for (const Json& v : cls) {
      if (!first) out += ' ';
      out += std::to_string(v.get<int>());
      first = false;
    }
    out += '}';
  }
  return out;
}

std::string graph_line(const Json& g) {
  std::string out;
  if (g.contains("name")) out += g.at("name").get<std::string>() + "  ";
  out += "n=" + std::to_string(g.at("n").get<int>());
  out += "  m=" + std::to_string(g.at("m").get<long>());
  out += "  graph6 " + g.at("graph6").get<std::string>();
  return out;
}

// ---- chi ------------------------------------------------------------

int run_chi(const Common& cfg, int k, bool decide, bool with_bounds) {
  GraphPtr h = load_graph(cfg);
  PatternPtr pat = load_pattern(cfg, h.g);

  if (decide) {
    int feasible = 0;
    CStr coloring;
    need(gfree_decide_k(h.g, pat.p, k, cfg.limit_ms(), &feasible, &coloring.p));
    if (cfg.json()) {
      Json out{{"k", k}, {"feasible", feasible != 0}};
      if (feasible != 0) out["witness"] = Json::parse(coloring.str());
      print_json(out);
      return 0;
    }
    if (feasible != 0)
      std::cout << "feasible with " << k
                << " classes: " << classes_text(Json::parse(coloring.str()))
                << "\n";
    else
      std::cout << "not feasible with " << k << " classes\n";
    return 0;
  }

  int value = 0;
  CStr report;
  need(gfree_chi(h.g, pat.p, cfg.limit_ms(), with_bounds ? 1 : 0, &value,
                 &report.p));
  Json j = Json::parse(report.str());
  bool proved_bound_broken = false;
  if (with_bounds) {
    for (const char* name : {"size", "degeneracy", "max_degree"}) {
      const Json& entry = j.at("bounds").at(name);
      if (entry.at("applicable").get<bool>() && !entry.at("ok").get<bool>())
        proved_bound_broken = true;
    }
  }
  if (cfg.json()) {
    print_json(j);
    return proved_bound_broken ? 2 : 0;
  }
  std::cout << "graph: " << graph_line(j.at("graph")) << "\n";
  std::cout << "pattern: " << j.at("pattern").get<std::string>() << "\n";
  std::cout << "chi = " << value << "\n";
  std::cout << "witness: " << classes_text(j.at("witness")) << "\n";
  if (with_bounds) {
    std::cout << "bounds (upper):\n";
    for (const char* name : {"size", "degeneracy", "max_degree", "chromatic_ratio"}) {
      const Json& entry = j.at("bounds").at(name);
      std::cout << "  " << name << ": ";
      if (!entry.at("applicable").get<bool>()) {
        std::cout << "not applicable\n";
        continue;
      }
      int bound = entry.at("value").get<int>();
      std::cout << bound << "  slack " << bound - value;
      if (!entry.at("ok").get<bool>())
        std::cout << (std::string(name) == "chromatic_ratio"
                          ? "  EXCEEDED (report-only)"
                          : "  VIOLATED");
      std::cout << "\n";
    }
  }
  return proved_bound_broken ? 2 : 0;
}

// ---- ng ---------------------------------------------------------------

int run_ng(const Common& cfg) {
  GraphPtr h = load_graph(cfg);
  PatternPtr pat = load_pattern(cfg, h.g);
  CStr record;
  need(gfree_ng(h.g, pat.p, cfg.limit_ms(), &record.p));
  Json j = Json::parse(record.str());
  bool violated = j.contains("bound_ok") && !j.at("bound_ok").get<bool>();
  if (cfg.json()) {
    print_json(j);
    return violated ? 2 : 0;
  }
  std::cout << "graph: n=" << j.at("n").get<int>() << "  graph6 "
            << j.at("graph6").get<std::string>() << "\n";
  std::cout << "pattern: " << j.at("pattern").get<std::string>() << "\n";
  std::cout << "chi(H) = " << j.at("chi").get<int>()
            << "   chi(complement) = " << j.at("chi_complement").get<int>()
            << "   sum = " << j.at("sum").get<int>() << "\n";
  std::string branch = j.at("branch").get<std::string>();
  if (!j.contains("bound")) {
    std::cout << "no proved bound applies (branch " << branch << ")\n";
    return 0;
  }
  std::cout << "branch " << branch << ": bound " << j.at("bound").get<int>()
            << "  slack " << j.at("slack").get<int>()
            << (j.at("sharp").get<bool>() ? "  sharp" : "") << "\n";
  if (j.contains("refined") && j.at("refined").at("applicable").get<bool>()) {
    const Json& r = j.at("refined");
    std::cout << "refinement (n = k*d, k=" << r.at("k").get<int>()
              << ", d=" << r.at("d").get<int>() << "): critical_side "
              << r.at("critical_side").get<bool>() << ", free_pair_subset "
              << r.at("free_pair_subset").get<bool>() << ", girth_subset "
              << r.at("girth_subset").get<bool>() << " -> bound "
              << r.at("bound").get<int>() << "\n";
  }
  if (violated) std::cout << "BOUND VIOLATED\n";
  return violated ? 2 : 0;
}

// ---- critical -----------------------------------------------------------

int run_critical(const Common& cfg, int target, bool has_target) {
  GraphPtr h = load_graph(cfg);
  PatternPtr pat = load_pattern(cfg, h.g);

  if (has_target) {
    GraphPtr sub;
    need(gfree_subgraph_with_chi(h.g, pat.p, target, cfg.limit_ms(), &sub.g));
    CStr g6;
    need(gfree_graph_to_graph6(sub.g, &g6.p));
    if (cfg.json()) {
      print_json(Json{{"target", target},
                      {"n", gfree_graph_order(sub.g)},
                      {"m", gfree_graph_size(sub.g)},
                      {"graph6", g6.str()}});
      return 0;
    }
    std::cout << "subgraph with chi " << target << ": n="
              << gfree_graph_order(sub.g) << " m=" << gfree_graph_size(sub.g)
              << "  graph6 " << g6.str() << "\n";
    return 0;
  }

  CStr cert;
  need(gfree_critical(h.g, pat.p, cfg.limit_ms(), &cert.p));
  Json j = Json::parse(cert.str());
  if (cfg.json()) {
    print_json(j);
    return 0;
  }
  std::cout << "chi = " << j.at("k").get<int>() << "  critical core: "
            << graph_line(j.at("core")) << "\n";
  std::cout << "vertices:";
  for (const Json& v : j.at("vertices")) std::cout << ' ' << v.get<int>();
  std::cout << "\nedges:";
  for (const Json& e : j.at("edges"))
    std::cout << " (" << e[0].get<int>() << ',' << e[1].get<int>() << ')';
  std::cout << "\nchi after deleting each vertex:";
  for (const Json& v : j.at("vertex_evidence")) std::cout << ' ' << v.get<int>();
  std::cout << "\nchi after deleting each edge:";
  for (const Json& v : j.at("edge_evidence")) std::cout << ' ' << v.get<int>();
  std::cout << "\nmin degree " << j.at("min_degree").get<int>() << " (needs >= "
            << j.at("min_degree_required").get<int>() << "): "
            << (j.at("min_degree_ok").get<bool>() ? "ok" : "VIOLATED") << "\n";
  if (j.at("is_whole_graph").get<bool>())
    std::cout << "the whole graph is already critical\n";
  return j.at("min_degree_ok").get<bool>() ? 0 : 2;
}

// ---- witness ------------------------------------------------------------

int run_witness(const Common& cfg) {
  int all_ok = 0;
  CStr results;
  need(gfree_witness_suite(cfg.limit_ms(), &all_ok, &results.p));
  Json j = Json::parse(results.str());
  if (cfg.json()) {
    print_json(j);
    return all_ok != 0 ? 0 : 2;
  }
  for (const Json& row : j.at("results")) {
    const Json& rec = row.at("record");
    std::cout << (row.at("ok").get<bool>() ? "[ok]  " : "[FAIL] ")
              << row.at("name").get<std::string>() << ": chi "
              << rec.at("chi").get<int>() << " + "
              << rec.at("chi_complement").get<int>() << " = "
              << rec.at("sum").get<int>() << " (bound "
              << rec.at("bound").get<int>() << ", branch "
              << rec.at("branch").get<std::string>() << ")\n";
  }
  std::cout << (all_ok != 0 ? "all witnesses sharp\n"
                            : "some witnesses missed their published values\n");
  return all_ok != 0 ? 0 : 2;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const Common& cfg, int enumerate_n, bool has_enumerate,
               const std::vector<std::string>& patterns, int jobs) {
  if (patterns.empty()) usage_error("need at least one --pattern");
  std::vector<const char*> pats;
  for (const std::string& p : patterns) pats.push_back(p.c_str());

  long violations = 0;
  CStr report;
  if (has_enumerate) {
    need(gfree_verify_enumerated(enumerate_n, pats.data(),
                                 static_cast<int>(pats.size()), jobs,
                                 cfg.limit_ms(), &violations, &report.p));
  } else {
    std::string text = cfg.input_path.empty()
                           ? read_stream(std::cin)
                           : read_input(cfg.input_path);
    need(gfree_verify_graph6(text.c_str(), pats.data(),
                             static_cast<int>(pats.size()), jobs,
                             cfg.limit_ms(), &violations, &report.p));
  }
  Json j = Json::parse(report.str());
  if (cfg.json()) {
    print_json(j);
    return violations > 0 ? 2 : 0;
  }
  const Json& s = j.at("summary");
  std::cout << "graphs: " << s.at("graphs").get<long>()
            << "  pairs: " << s.at("pairs").get<long>()
            << "  sharp: " << s.at("sharp").get<long>()
            << "  max slack: " << s.at("max_slack").get<int>() << "\n";
  for (const Json& w : j.at("warnings"))
    std::cout << "warning: " << w.get<std::string>() << "\n";
  for (const Json& v : j.at("chromatic_ratio_violations"))
    std::cout << "ratio bound exceeded (report-only): graph6 "
              << v.at("graph6").get<std::string>() << " pattern "
              << v.at("pattern").get<std::string>() << ": "
              << v.at("detail").get<std::string>() << "\n";
  if (violations == 0) {
    std::cout << "no violations\n";
    return 0;
  }
  for (const Json& v : j.at("violations"))
    std::cout << "VIOLATION [" << v.at("check").get<std::string>()
              << "] graph6 " << v.at("graph6").get<std::string>()
              << " pattern " << v.at("pattern").get<std::string>() << ": "
              << v.at("detail").get<std::string>() << "\n";
  return 2;
}

void add_common(CLI::App* sub, Common& cfg, bool with_graph) {
  if (with_graph) {
    sub->add_option("--graph", cfg.graph_spec,
                    "graph spec (K5, C6, K3,4, K6+4K1, g6:..., ...)");
    sub->add_option("--input", cfg.input_path,
                    "file with one graph6 line or a DIMACS edge list; - for stdin");
  }
  sub->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--time-limit", cfg.time_limit, "seconds before giving up")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern-free chromatic numbers, bounds, critical cores, and "
               "complement-sum audits"};
  app.require_subcommand(1);
  int exit_code = 0;

  Common chi_cfg;
  int chi_k = 0;
  bool chi_no_bounds = false;
  CLI::App* chi = app.add_subcommand(
      "chi", "exact pattern-free chromatic number with witness and bounds");
  add_common(chi, chi_cfg, true);
  chi->add_option("--pattern", chi_cfg.pattern, "pattern descriptor")->required();
  chi->add_flag("--induced", chi_cfg.induced, "forbid induced copies instead");
  CLI::Option* chi_k_opt =
      chi->add_option("--k", chi_k, "decide k-colorability instead")
          ->check(CLI::NonNegativeNumber);
  chi->add_flag("--no-bounds", chi_no_bounds, "skip the upper-bound report");
  chi->callback([&] {
    exit_code = run_chi(chi_cfg, chi_k, chi_k_opt->count() > 0, !chi_no_bounds);
  });

  Common ng_cfg;
  CLI::App* ng = app.add_subcommand(
      "ng", "chi(H) + chi(complement) against the proved upper bound");
  add_common(ng, ng_cfg, true);
  ng->add_option("--pattern", ng_cfg.pattern, "pattern descriptor")->required();
  ng->callback([&] { exit_code = run_ng(ng_cfg); });

  Common crit_cfg;
  int crit_target = 0;
  CLI::App* crit = app.add_subcommand(
      "critical", "extract a critical core with deletion evidence");
  add_common(crit, crit_cfg, true);
  crit->add_option("--pattern", crit_cfg.pattern, "pattern descriptor")
      ->required();
  crit->add_flag("--induced", crit_cfg.induced, "forbid induced copies instead");
  CLI::Option* crit_target_opt =
      crit->add_option("--target", crit_target,
                       "instead extract a subgraph with this exact chi")
          ->check(CLI::NonNegativeNumber);
  crit->callback([&] {
    exit_code =
        run_critical(crit_cfg, crit_target, crit_target_opt->count() > 0);
  });

  Common wit_cfg;
  CLI::App* wit = app.add_subcommand(
      "witness", "reproduce the published extremal constructions");
  add_common(wit, wit_cfg, false);
  wit->callback([&] { exit_code = run_witness(wit_cfg); });

  Common ver_cfg;
  int ver_enumerate = 0;
  int ver_jobs = 1;
  std::vector<std::string> ver_patterns;
  CLI::App* ver = app.add_subcommand(
      "verify", "audit every bound over a graph6 corpus (file, stdin, or "
                "enumerated)");
  add_common(ver, ver_cfg, false);
  ver->add_option("--input", ver_cfg.input_path,
                  "graph6 corpus, one per line; - or omitted for stdin");
  ver->add_option("--pattern", ver_patterns, "pattern descriptor (repeatable)")
      ->required();
  CLI::Option* ver_enum_opt =
      ver->add_option("--enumerate", ver_enumerate,
                      "audit all isomorphism classes with up to N vertices")
          ->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", ver_jobs, "worker threads")
      ->envname("GFREE_JOBS")
      ->check(CLI::PositiveNumber);
  ver->callback([&] {
    exit_code = run_verify(ver_cfg, ver_enumerate, ver_enum_opt->count() > 0,
                           ver_patterns, ver_jobs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Exit& e) {
    return e.code;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed library report: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
