#pragma once

#include <utility>
#include <vector>

#include "rbx/graph.hpp"

namespace rbx {

// A subgraph is a view: a subset of the parent's edge ids plus a vertex
// universe, never a copy. Edge ids in the view are parent edge ids, so
// colorings indexed by parent edge id apply directly.
struct SubgraphView {
  const Graph* parent = nullptr;
  Bitset edges;     // alive edge ids
  Bitset vertices;  // vertex universe of the view

  SubgraphView() = default;

  // Whole-graph view.
  explicit SubgraphView(const Graph& g)
      : parent(&g), edges(g.edge_count(), true), vertices(g.vertex_count(), true) {}

  // Edge-subset view over all vertices.
  SubgraphView(const Graph& g, Bitset edge_mask)
      : parent(&g), edges(std::move(edge_mask)), vertices(g.vertex_count(), true) {}

  SubgraphView(const Graph& g, Bitset edge_mask, Bitset vertex_mask)
      : parent(&g), edges(std::move(edge_mask)), vertices(std::move(vertex_mask)) {}

  int edge_count() const { return edges.count(); }
  int vertex_count() const { return vertices.count(); }

  bool has_edge(int id) const { return edges.test(id); }
  bool has_vertex(int v) const { return vertices.test(v); }

  int degree(int v) const {
    if (!vertices.test(v)) return 0;
    int d = 0;
    for (const IncEntry& e : parent->adj(v))
      if (edges.test(e.edge) && vertices.test(e.nbr)) ++d;
    return d;
  }

  // Minimum degree over non-isolated vertices of the view; 0 if edgeless.
  int min_degree_nonisolated() const {
    int best = -1;
    vertices.for_each([&](int v) {
      int d = degree(v);
      if (d > 0 && (best < 0 || d < best)) best = d;
    });
    return best < 0 ? 0 : best;
  }

  // Minimum degree over every vertex of the view's universe.
  int min_degree_all() const {
    int best = -1;
    vertices.for_each([&](int v) {
      int d = degree(v);
      if (best < 0 || d < best) best = d;
    });
    return best < 0 ? 0 : best;
  }

  // Drop vertices of S (and their incident edges) from the view.
  void remove_vertices(const Bitset& s) {
    vertices.subtract(s);
    std::vector<int> dead;
    edges.for_each([&](int id) {
      const Edge& e = parent->edge(id);
      if (!vertices.test(e.u) || !vertices.test(e.v)) dead.push_back(id);
    });
    for (int id : dead) edges.reset(id);
  }

  // Copy the view into a standalone Graph over the parent's full vertex set.
  // Edges keep their relative order (ascending parent id); the returned map
  // sends new edge ids to parent edge ids.
  std::pair<Graph, std::vector<int>> materialize() const {
    std::vector<std::pair<int, int>> es;
    std::vector<int> ids;
    edges.for_each([&](int id) {
      es.push_back({parent->edge(id).u, parent->edge(id).v});
      ids.push_back(id);
    });
    return {Graph::from_edges(parent->vertex_count(), es), ids};
  }

  // Copy the view relabeled to its vertex mask. The returned map sends new
  // vertex ids to parent vertex ids. Edges with an endpoint outside the mask
  // are dropped.
  std::pair<Graph, std::vector<int>> compact() const {
    std::vector<int> back, fwd(parent->vertex_count(), -1);
    vertices.for_each([&](int v) {
      fwd[v] = static_cast<int>(back.size());
      back.push_back(v);
    });
    std::vector<std::pair<int, int>> es;
    edges.for_each([&](int id) {
      const Edge& e = parent->edge(id);
      if (fwd[e.u] >= 0 && fwd[e.v] >= 0) es.push_back({fwd[e.u], fwd[e.v]});
    });
    return {Graph::from_edges(static_cast<int>(back.size()), es), back};
  }
};

}  // namespace rbx
