#include "rbx/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rbx {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) fail_precondition("vertex count must be nonnegative");
  Graph g;
  g.vertex_count_ = vertex_count;
  std::set<std::pair<int, int>> seen;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) fail_precondition("self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      fail_precondition("edge endpoint out of range");
    int u = std::min(a, b), v = std::max(a, b);
    if (!seen.insert({u, v}).second)
      fail_precondition("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    g.edges_.push_back({u, v, -1});
  }
  g.build_adjacency();
  return g;
}

Graph Graph::hypercube(int n) {
  if (n < 1 || n > 20) fail_resource("hypercube dimension must be in [1, 20]");
  Graph g;
  g.vertex_count_ = 1 << n;
  g.cube_dim_ = n;
  g.edges_.reserve(static_cast<size_t>(n) << (n - 1));
  for (int u = 0; u < g.vertex_count_; ++u)
    for (int c = 0; c < n; ++c) {
      int v = u ^ (1 << c);
      if (v > u) g.edges_.push_back({u, v, c});
    }
  g.build_adjacency();
  return g;
}

Graph Graph::complete_graph(int n) {
  if (n < 2 || n > 64) fail_resource("complete graph order must be in [2, 64]");
  Graph g;
  g.vertex_count_ = n;
  g.edges_.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges_.push_back({u, v, -1});
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  adj_.assign(vertex_count_, {});
  for (int id = 0; id < edge_count(); ++id) {
    adj_[edges_[id].u].push_back({edges_[id].v, id});
    adj_[edges_[id].v].push_back({edges_[id].u, id});
  }
  for (auto& row : adj_)
    std::sort(row.begin(), row.end(), [](const IncEntry& a, const IncEntry& b) { return a.nbr < b.nbr; });
  rows_.clear();
  if (vertex_count_ <= kBitRowLimit && vertex_count_ > 0) {
    rows_.assign(vertex_count_, Bitset(vertex_count_));
    for (const Edge& e : edges_) {
      rows_[e.u].set(e.v);
      rows_[e.v].set(e.u);
    }
  }
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_ || u == v) return -1;
  const auto& row = adj_[degree(u) <= degree(v) ? u : v];
  int target = degree(u) <= degree(v) ? v : u;
  auto it = std::lower_bound(row.begin(), row.end(), target,
                             [](const IncEntry& a, int t) { return a.nbr < t; });
  if (it != row.end() && it->nbr == target) return it->edge;
  return -1;
}

int Graph::common_neighbors(int u, int v) const {
  if (has_bit_rows()) return rows_[u].intersect_count(rows_[v]);
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  size_t i = 0, j = 0;
  int c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].nbr < b[j].nbr)
      ++i;
    else if (a[i].nbr > b[j].nbr)
      ++j;
    else
      ++c, ++i, ++j;
  }
  return c;
}

int Graph::max_common_neighbors() const {
  int best = 0;
  for (int u = 0; u < vertex_count_; ++u)
    for (int v = u + 1; v < vertex_count_; ++v) best = std::max(best, common_neighbors(u, v));
  return best;
}

bool forbidden_subgraph_check(const Graph& g, const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::triangle:
      for (const Edge& e : g.edges())
        if (g.common_neighbors(e.u, e.v) > 0) return false;
      return true;
    case Pattern::Kind::k2r: {
      if (p.r < 2) fail_precondition("K_{2,r} check needs r >= 2");
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
          if (g.common_neighbors(u, v) >= p.r) return false;
      return true;
    }
  }
  return true;
}

std::vector<Bitset> coordinate_matchings(const Graph& g) {
  if (!g.is_cube()) fail_precondition("coordinate matchings need a hypercube host");
  int n = *g.cube_dim();
  std::vector<Bitset> ms(n, Bitset(g.edge_count()));
  for (int id = 0; id < g.edge_count(); ++id) ms[g.edge(id).coord].set(id);
  return ms;
}

}  // namespace rbx
