#include <doctest.h>

#include "errors.hpp"
#include "graph.hpp"
#include "testutil.hpp"

using gfree::Graph;

TEST_CASE("named constructions have the right shape") {
  Graph k5 = gfree::complete_graph(5);
  CHECK(k5.order() == 5);
  CHECK(k5.size() == 10);
  CHECK(k5.min_degree() == 4);

  Graph c6 = gfree::cycle_graph(6);
  CHECK(c6.size() == 6);
  CHECK(c6.max_degree() == 2);
  CHECK(c6.adjacent(0, 5));
  CHECK_FALSE(c6.adjacent(0, 3));

  Graph p4 = gfree::path_graph(4);
  CHECK(p4.size() == 3);
  CHECK(p4.min_degree() == 1);

  Graph k34 = gfree::complete_bipartite(3, 4);
  CHECK(k34.order() == 7);
  CHECK(k34.size() == 12);
  CHECK(k34.min_degree() == 3);
  CHECK(k34.max_degree() == 4);

  Graph pet = gfree::petersen_graph();
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  CHECK(pet.min_degree() == 3);
  CHECK(pet.max_degree() == 3);

  Graph k6c6 = gfree::complete_minus_hamiltonian_cycle(3);
  CHECK(k6c6.order() == 6);
  CHECK(k6c6.size() == 15 - 6);
  CHECK(k6c6 == gfree::cycle_graph(6).complement());
}

TEST_CASE("construction validates its input") {
  CHECK_THROWS_AS(Graph(-1), gfree::InvalidArgument);
  CHECK_THROWS_AS(Graph(3, std::vector<gfree::Edge>{{0, 3}}),
                  gfree::InvalidArgument);
  CHECK_THROWS_AS(Graph(3, std::vector<gfree::Edge>{{1, 1}}),
                  gfree::InvalidArgument);
  CHECK_THROWS_AS(gfree::cycle_graph(2), gfree::InvalidArgument);
  CHECK_THROWS_AS(gfree::disjoint_copies(0, gfree::complete_graph(2)),
                  gfree::InvalidArgument);
  CHECK(Graph(3, {{0, 1}, {1, 0}}).size() == 1);  // duplicates collapse
}

TEST_CASE("complement is an involution and splits the edge count") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    Graph co = g.complement();
    CHECK(g.size() + co.size() == 9L * 8 / 2);
    CHECK(co.complement() == g);
  }
}

TEST_CASE("induced subgraph keeps labels in order") {
  // house: triangle on {0,1,2} plus pendant path 2-3-4
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  Graph tri = g.induced(std::vector<int>{0, 2, 1});  // order-insensitive
  CHECK(tri == gfree::complete_graph(3));
  Graph path = g.induced(std::vector<int>{2, 3, 4});
  CHECK(path == gfree::path_graph(3));
  CHECK_THROWS_AS(g.induced(std::vector<int>{0, 0}), gfree::InvalidArgument);
  CHECK_THROWS_AS(g.induced(std::vector<int>{5}), gfree::InvalidArgument);
}

TEST_CASE("vertex and edge deletion") {
  Graph c5 = gfree::cycle_graph(5);
  // drop vertex 2 of 0-1-2-3-4-0; survivors relabel to 0,1,2,3
  CHECK(c5.without_vertex(2) == Graph(4, {{0, 1}, {2, 3}, {0, 3}}));
  Graph broken = c5.without_edge(0, 4);
  CHECK(broken.size() == 4);
  CHECK(oracle::is_forest(broken));
  CHECK_THROWS_AS(c5.without_edge(0, 2), gfree::InvalidArgument);
}

TEST_CASE("join and disjoint union compose orders and edges") {
  Graph a = gfree::cycle_graph(3);
  Graph b = gfree::empty_graph(4);
  Graph j = Graph::join(a, b);
  CHECK(j.order() == 7);
  CHECK(j.size() == 3 + 3L * 4);
  CHECK(j.adjacent(0, 5));
  Graph u = Graph::disjoint_union(a, b);
  CHECK(u.order() == 7);
  CHECK(u.size() == 3);
  CHECK_FALSE(u.adjacent(0, 5));

  // K6 + 4K1 = the split-graph witness host
  Graph host = Graph::join(gfree::complete_graph(6), gfree::empty_graph(4));
  CHECK(host.order() == 10);
  CHECK(host.size() == 15 + 24);
  CHECK(host.min_degree() == 6);
}

TEST_CASE("degeneracy matches the textbook values") {
  CHECK(gfree::complete_graph(5).degeneracy().degeneracy == 4);
  CHECK(gfree::cycle_graph(17).degeneracy().degeneracy == 2);
  CHECK(gfree::path_graph(9).degeneracy().degeneracy == 1);
  CHECK(gfree::empty_graph(4).degeneracy().degeneracy == 0);
  CHECK(gfree::petersen_graph().degeneracy().degeneracy == 3);
  CHECK(gfree::complete_bipartite(3, 7).degeneracy().degeneracy == 3);

  // peel order: every vertex has at most `degeneracy` neighbors later on
  std::mt19937_64 rng(11);
  for (int round = 0; round < 10; ++round) {
    Graph g = oracle::random_graph(12, 0.3, rng);
    auto peel = g.degeneracy();
    std::vector<int> rank(12);
    for (int i = 0; i < 12; ++i) rank[peel.order[i]] = i;
    int worst = 0;
    for (int v = 0; v < 12; ++v) {
      int later = 0;
      g.neighbors(v).for_each([&](int u) {
        if (rank[u] > rank[v]) ++later;
      });
      worst = std::max(worst, later);
    }
    CHECK(worst <= peel.degeneracy);
  }
}
