#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "gfree.h"

// Everything here goes through the C surface only: handles, status codes,
// and JSON strings. No library internals.

using Json = nlohmann::json;

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { gfree_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct G {
  gfree_graph* g = nullptr;
  explicit G(const char* spec) { REQUIRE(gfree_graph_from_spec(spec, &g) == GFREE_OK); }
  G() = default;
  ~G() { gfree_graph_free(g); }
};

struct P {
  gfree_pattern* p = nullptr;
  explicit P(const char* desc, const gfree_graph* self = nullptr) {
    REQUIRE(gfree_pattern_parse(desc, self, &p) == GFREE_OK);
  }
  ~P() { gfree_pattern_free(p); }
};

}  // namespace

TEST_CASE("graph handles expose shape and codecs") {
  G k5("K5");
  CHECK(gfree_graph_order(k5.g) == 5);
  CHECK(gfree_graph_size(k5.g) == 10);
  CHECK(gfree_graph_has_edge(k5.g, 0, 4) == 1);
  CHECK(gfree_graph_has_edge(k5.g, 0, 0) == 0);
  CHECK(gfree_graph_has_edge(k5.g, 0, 9) == 0);

  Str g6;
  REQUIRE(gfree_graph_to_graph6(k5.g, &g6.p) == GFREE_OK);
  CHECK(g6.str() == "D~{");

  gfree_graph* round = nullptr;
  REQUIRE(gfree_graph_from_graph6("D~{", &round) == GFREE_OK);
  CHECK(gfree_graph_order(round) == 5);
  gfree_graph_free(round);

  int degen = -1;
  REQUIRE(gfree_graph_degeneracy(k5.g, &degen) == GFREE_OK);
  CHECK(degen == 4);

  gfree_graph* co = nullptr;
  REQUIRE(gfree_graph_complement(k5.g, &co) == GFREE_OK);
  CHECK(gfree_graph_size(co) == 0);
  gfree_graph_free(co);

  gfree_graph* from_dimacs = nullptr;
  REQUIRE(gfree_graph_from_dimacs("p edge 3 2\ne 1 2\ne 2 3\n",
                                  &from_dimacs) == GFREE_OK);
  CHECK(gfree_graph_order(from_dimacs) == 3);
  CHECK(gfree_graph_size(from_dimacs) == 2);
  gfree_graph_free(from_dimacs);
}

TEST_CASE("errors set a status and a readable message") {
  gfree_graph* g = nullptr;
  CHECK(gfree_graph_from_spec("Z9", &g) == GFREE_ERR_PARSE);
  CHECK(std::strlen(gfree_last_error()) > 0);
  CHECK(gfree_graph_from_graph6("not graph6!", &g) == GFREE_ERR_PARSE);

  G host("K5");
  gfree_pattern* p = nullptr;
  CHECK(gfree_pattern_parse("K1", nullptr, &p) == GFREE_ERR_INVALID);
  CHECK(gfree_pattern_parse("self", nullptr, &p) == GFREE_ERR_INVALID);

  char* lines = nullptr;
  CHECK(gfree_enumerate_graph6(9, &lines) == GFREE_ERR_UNSUPPORTED);
}

TEST_CASE("chi, greedy, and decide through the C surface") {
  G host("K5");
  P k3("K3");
  int value = 0;
  Str report;
  REQUIRE(gfree_chi(host.g, k3.p, 0, 1, &value, &report.p) == GFREE_OK);
  CHECK(value == 3);
  Json j = Json::parse(report.str());
  CHECK(j.at("chi").get<int>() == 3);
  CHECK(j.at("pattern").get<std::string>() == "K3");
  CHECK(j.at("bounds").at("degeneracy").at("ok").get<bool>());
  CHECK(j.at("witness").at("classes").size() == 3);

  int feasible = -1;
  char* coloring = reinterpret_cast<char*>(1);
  REQUIRE(gfree_decide_k(host.g, k3.p, 2, 0, &feasible, &coloring) == GFREE_OK);
  CHECK(feasible == 0);
  CHECK(coloring == nullptr);
  REQUIRE(gfree_decide_k(host.g, k3.p, 3, 0, &feasible, &coloring) == GFREE_OK);
  CHECK(feasible == 1);
  REQUIRE(coloring != nullptr);
  CHECK(Json::parse(coloring).at("k").get<int>() == 3);
  gfree_string_free(coloring);

  int classes = 0;
  REQUIRE(gfree_greedy_coloring(host.g, k3.p, &classes, nullptr) == GFREE_OK);
  CHECK(classes >= 3);
}

TEST_CASE("induced mode flips through the handle") {
  G host("K6");
  P c4("C4");
  int found = -1;
  REQUIRE(gfree_contains_copy(host.g, c4.p, &found) == GFREE_OK);
  CHECK(found == 1);
  REQUIRE(gfree_pattern_set_induced(c4.p, 1) == GFREE_OK);
  REQUIRE(gfree_contains_copy(host.g, c4.p, &found) == GFREE_OK);
  CHECK(found == 0);
  REQUIRE(gfree_pattern_set_induced(c4.p, 0) == GFREE_OK);
  REQUIRE(gfree_contains_copy(host.g, c4.p, &found) == GFREE_OK);
  CHECK(found == 1);

  P cycles("cycles");
  CHECK(gfree_pattern_set_induced(cycles.p, 1) == GFREE_ERR_INVALID);
  CHECK(gfree_pattern_min_degree(cycles.p) == 2);
}

TEST_CASE("clique number and girth") {
  G pet("petersen");
  int w = 0, g = 0;
  REQUIRE(gfree_clique_number(pet.g, &w) == GFREE_OK);
  CHECK(w == 2);
  REQUIRE(gfree_girth(pet.g, &g) == GFREE_OK);
  CHECK(g == 5);
  G forest("P7");
  REQUIRE(gfree_girth(forest.g, &g) == GFREE_OK);
  CHECK(g == 0);
}

TEST_CASE("critical certificates and chi-targeted subgraphs") {
  G host("K5.K4");
  P k3("K3");
  Str cert;
  REQUIRE(gfree_critical(host.g, k3.p, 0, &cert.p) == GFREE_OK);
  Json j = Json::parse(cert.str());
  CHECK(j.at("k").get<int>() == 3);
  CHECK(j.at("vertices").size() == 5);
  CHECK(j.at("min_degree_ok").get<bool>());
  for (const Json& e : j.at("vertex_evidence")) CHECK(e.get<int>() == 2);

  gfree_graph* sub = nullptr;
  REQUIRE(gfree_subgraph_with_chi(host.g, k3.p, 2, 0, &sub) == GFREE_OK);
  CHECK(gfree_graph_order(sub) > 0);
  gfree_graph_free(sub);
}

TEST_CASE("ng record and refined conditions") {
  G k44("K4,4");
  P self("self", k44.g);
  Str record;
  REQUIRE(gfree_ng(k44.g, self.p, 0, &record.p) == GFREE_OK);
  Json j = Json::parse(record.str());
  CHECK(j.at("sum").get<int>() == 3);
  CHECK(j.at("bound").get<int>() == 3);
  CHECK(j.at("sharp").get<bool>());
  CHECK(j.at("bound_ok").get<bool>());

  G c9("C9");
  Str refined;
  REQUIRE(gfree_refined_conditions(c9.g, 3, 0, &refined.p) == GFREE_OK);
  Json r = Json::parse(refined.str());
  CHECK(r.at("applicable").get<bool>());
  CHECK(r.at("any").get<bool>());
}

TEST_CASE("witness suite and enumerated verify") {
  int all_ok = 0;
  Str results;
  REQUIRE(gfree_witness_suite(0, &all_ok, &results.p) == GFREE_OK);
  CHECK(all_ok == 1);
  CHECK(Json::parse(results.str()).at("results").size() == 6);

  const char* pats[] = {"K3", "cycles"};
  long violations = -1;
  Str report;
  REQUIRE(gfree_verify_enumerated(4, pats, 2, 1, 0, &violations, &report.p) ==
          GFREE_OK);
  CHECK(violations == 0);
  Json v = Json::parse(report.str());
  CHECK(v.at("summary").at("graphs").get<long>() == 19);
  CHECK(v.at("summary").at("pairs").get<long>() == 38);
  CHECK(v.at("records").size() == 38);
}

TEST_CASE("corpus text verify tolerates bad lines and reports them") {
  const char* pats[] = {"K3"};
  long violations = -1;
  Str report;
  REQUIRE(gfree_verify_graph6("D~{\nzz!bad\nDhc\n", pats, 1, 1, 0, &violations,
                              &report.p) == GFREE_OK);
  CHECK(violations == 0);
  Json j = Json::parse(report.str());
  CHECK(j.at("summary").at("graphs").get<long>() == 2);
  CHECK(j.at("warnings").size() == 1);
}

TEST_CASE("timeouts map to the timeout status") {
  // a dense 60-vertex graph: its chromatic number is far out of reach
  G host(
      "g6:{~zAlio?AaTtAtJsuM{iI{wF|jG@OD\\_AvBomarXZvfqfk|dDgQoYLwTZAml~@_ja{P"
      "Nc{mKpA}RtLAOaIcZ]OyK@X@ApkLr`UOdr_VFTDUzCCTgW[~FRaSsqw}omQiawoRgDdPbd"
      "s|?oAoA{Ek]dhFx@KQpKv]sK?oz?OGmAMQz|ZlvFvwPODEwmcKtZZdaRGm}TLaz}Ww}m^Z"
      "ve\\cQ~ztYRCRcTDoG[MGwnAWA[euJcIQ`bl~]nk\\Fs`svfkTwkvmNl]w~Fvu}XDPc@mr"
      "k}@Lq`dnx[Rq{?_A_O`GV");
  CHECK(gfree_graph_order(host.g) == 60);
  P k2("K2");
  int value = 0;
  gfree_status st = gfree_chi(host.g, k2.p, 25, 0, &value, nullptr);
  CHECK(st == GFREE_ERR_TIMEOUT);
  CHECK(std::strlen(gfree_last_error()) > 0);
}

TEST_CASE("version string is present") {
  CHECK(std::strlen(gfree_version()) > 0);
}
