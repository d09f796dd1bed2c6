#include <algorithm>
#include <set>

#include "doctest.h"
#include "rbx/graph.hpp"
#include "rbx/subgraph.hpp"

using namespace rbx;

TEST_CASE("hypercube shape") {
  for (int n = 1; n <= 6; ++n) {
    Graph g = Graph::hypercube(n);
    CHECK(g.vertex_count() == (1 << n));
    CHECK(g.edge_count() == n * (1 << (n - 1)));
    CHECK(g.is_cube());
    CHECK(g.cube_dim() == n);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == n);
    for (const Edge& e : g.edges()) {
      CHECK(e.u < e.v);
      CHECK((e.u ^ e.v) == (1 << e.coord));
    }
  }
}

TEST_CASE("hypercube edge ids and adjacency") {
  Graph g = Graph::hypercube(3);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    CHECK(g.edge_id(e.u, e.v) == id);
    CHECK(g.edge_id(e.v, e.u) == id);
    CHECK(g.adjacent(e.u, e.v));
  }
  CHECK(g.edge_id(0, 7) == -1);
  CHECK(!g.adjacent(0, 7));
  // Q3 is triangle-free and every pair at distance 2 has exactly two common
  // neighbors.
  CHECK(g.common_neighbors(0, 1) == 0);
  CHECK(g.common_neighbors(0, 3) == 2);
  CHECK(g.max_common_neighbors() == 2);
}

TEST_CASE("complete graph") {
  Graph g = Graph::complete_graph(5);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 10);
  CHECK(!g.is_cube());
  CHECK(g.max_common_neighbors() == 3);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(g.adjacent(u, v));
}

TEST_CASE("from_edges validation") {
  CHECK_NOTHROW(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("forbidden subgraph checks") {
  Graph k3 = Graph::complete_graph(3);
  Graph q3 = Graph::hypercube(3);
  CHECK(!forbidden_subgraph_check(k3, Pattern::triangle()));
  CHECK(forbidden_subgraph_check(q3, Pattern::triangle()));

  // K_{2,3}: parts {0,1}, {2,3,4}.
  Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(!forbidden_subgraph_check(k23, Pattern::k2r(3)));
  CHECK(forbidden_subgraph_check(k23, Pattern::k2r(4)));
  CHECK(forbidden_subgraph_check(q3, Pattern::k2r(3)));  // common nbrs max 2
  CHECK(!forbidden_subgraph_check(q3, Pattern::k2r(2)));
}

TEST_CASE("coordinate matchings partition the cube edges") {
  Graph g = Graph::hypercube(4);
  auto ms = coordinate_matchings(g);
  REQUIRE(ms.size() == 4);
  Bitset all(g.edge_count());
  for (int c = 0; c < 4; ++c) {
    CHECK(ms[c].count() == 8);  // perfect matching on 16 vertices
    CHECK(!all.intersects(ms[c]));
    all |= ms[c];
    std::set<int> covered;
    ms[c].for_each([&](int id) {
      covered.insert(g.edge(id).u);
      covered.insert(g.edge(id).v);
      CHECK(g.edge(id).coord == c);
    });
    CHECK(covered.size() == 16);
  }
  CHECK(all.count() == static_cast<size_t>(g.edge_count()));
}

TEST_CASE("subgraph views") {
  Graph g = Graph::hypercube(3);
  SubgraphView whole(g);
  CHECK(whole.edge_count() == 12);
  CHECK(whole.min_degree_nonisolated() == 3);

  Bitset mask(g.edge_count());
  mask.set(g.edge_id(0, 1));
  mask.set(g.edge_id(0, 2));
  SubgraphView sub(g, mask);
  CHECK(sub.edge_count() == 2);
  CHECK(sub.degree(0) == 2);
  CHECK(sub.degree(1) == 1);
  CHECK(sub.min_degree_nonisolated() == 1);

  // materialize keeps the parent vertex set and maps new edge ids back.
  auto [mg, eback] = sub.materialize();
  CHECK(mg.vertex_count() == 8);
  CHECK(mg.edge_count() == 2);
  CHECK(eback == std::vector<int>{g.edge_id(0, 1), g.edge_id(0, 2)});

  // compact relabels to the vertex mask and maps new vertex ids back.
  Bitset verts(g.vertex_count());
  verts.set(0);
  verts.set(1);
  verts.set(2);
  SubgraphView tight(g, mask, verts);
  auto [tg, vback] = tight.compact();
  CHECK(tg.vertex_count() == 3);
  CHECK(tg.edge_count() == 2);
  CHECK(vback == std::vector<int>{0, 1, 2});
}

TEST_CASE("remove vertices drops incident edges") {
  Graph g = Graph::hypercube(2);
  SubgraphView rest(g);
  Bitset kill(g.vertex_count());
  kill.set(0);
  rest.remove_vertices(kill);
  CHECK(rest.edge_count() == 2);
  CHECK(rest.degree(0) == 0);
  CHECK(rest.min_degree_nonisolated() == 1);
}
