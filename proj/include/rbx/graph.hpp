#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbx/bitset.hpp"
#include "rbx/error.hpp"

namespace rbx {

// One endpoint entry in an adjacency row: the neighbor plus the id of the
// connecting edge, so colorings (indexed by edge id) can be consulted while
// walking neighbors.
struct IncEntry {
  int nbr;
  int edge;
};

struct Edge {
  int u, v;       // u < v
  int coord;      // hypercube coordinate of the edge, -1 for non-cube hosts
};

// Simple undirected graph. Vertices are 0..vertex_count-1, edge ids are
// 0..edge_count-1 and stable: subgraph views (see subgraph.hpp) are edge-id
// subsets over the same parent, never copies. Adjacency rows are kept sorted
// by neighbor; for hosts up to kBitRowLimit vertices a bitset row per vertex
// is built as well, which the pattern checks and the min-degree peeling use.
class Graph {
 public:
  static constexpr int kBitRowLimit = 4096;

  Graph() = default;

  // General constructor. Rejects self-loops, out-of-range endpoints and
  // parallel edges. Edge ids follow the order given.
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  // Hypercube Q_n: vertices are the n-bit integers, x ~ y iff x xor y is a
  // power of two. Edges are emitted for u ascending, coordinate ascending,
  // keeping only u < v. 1 <= n <= 20 (memory guard).
  static Graph hypercube(int n);

  // Complete graph K_n, 2 <= n <= 64. Edges for u < v, u ascending.
  static Graph complete_graph(int n);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  const std::vector<IncEntry>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edge id joining u and v, or -1.
  int edge_id(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

  // Hypercube tag: set iff the graph was built by hypercube().
  std::optional<int> cube_dim() const { return cube_dim_; }
  bool is_cube() const { return cube_dim_.has_value(); }

  bool has_bit_rows() const { return !rows_.empty(); }
  const Bitset& nbr_row(int v) const { return rows_[v]; }

  // Number of common neighbors of u and v.
  int common_neighbors(int u, int v) const;

  // Largest common-neighbor count over all vertex pairs (0 if < 2 vertices).
  // The smallest r with no K_{2,r} subgraph is this value + 1.
  int max_common_neighbors() const;

 private:
  void build_adjacency();

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncEntry>> adj_;
  std::vector<Bitset> rows_;
  std::optional<int> cube_dim_;
};

// Forbidden-pattern membership tests used by the bound dispatch.
struct Pattern {
  enum class Kind { triangle, k2r } kind;
  int r = 0;  // for k2r: the K_{2,r} side size, r >= 2

  static Pattern triangle() { return {Kind::triangle, 0}; }
  static Pattern k2r(int r) { return {Kind::k2r, r}; }
};

// True iff G contains no copy of the pattern.
bool forbidden_subgraph_check(const Graph& g, const Pattern& p);

// The n color-class matchings of a hypercube, as edge-id sets: matching c
// holds every edge with coordinate c. Partitions E(G); each is perfect.
std::vector<Bitset> coordinate_matchings(const Graph& g);

}  // namespace rbx
