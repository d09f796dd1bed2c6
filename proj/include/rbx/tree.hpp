#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbx/error.hpp"

namespace rbx {

// Tree with k edges on vertices 0..k, vertex 0 the root of the parent
// encoding. parent[0] == -1; edge i of the encoding joins i and parent[i].
struct Tree {
  int k = 0;
  std::vector<int> parent;            // size k+1
  std::vector<std::vector<int>> adj;  // derived, sorted

  int vertex_count() const { return k + 1; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// Validates and builds: parents.size() == k+1, parents[0] == -1, each entry a
// valid vertex, the edge set acyclic and connected.
Tree make_tree(const std::vector<int>& parents);

// Families used by the CLI and the harnesses.
Tree tree_path(int k);                       // k-edge path, vertices in line
Tree tree_star(int k);                       // K_{1,k}
Tree tree_spider(const std::vector<int>& legs);  // root 0, one path per leg
Tree tree_spider3(int t);                    // t legs of length 3
// base with an m-edge path attached at the base's vertex 0.
Tree tree_pendant(const Tree& base, int m);

// Vertex order sigma(0..k) whose every prefix induces a subtree: sigma(i) has
// exactly one neighbor among sigma(0..i-1), at position parent_pos[i]. Edge i
// of the ordering is {sigma(parent_pos[i]), sigma(i)}.
struct LeafOrdering {
  std::vector<int> order;
  std::vector<int> parent_pos;  // parent_pos[0] == -1

  int positions() const { return static_cast<int>(order.size()); }
  std::pair<int, int> edge_at(int i) const {  // tree-vertex pair of edge i >= 1
    return {order[parent_pos[i]], order[i]};
  }
};

// BFS from root, children visited in ascending label order. Deterministic.
LeafOrdering leaf_ordering(const Tree& t, int root);

// Checks the unique-earlier-neighbor invariant.
bool is_leaf_ordering(const Tree& t, const LeafOrdering& ord);

// Position-of-vertex inverse map.
std::vector<int> ordering_positions(const LeafOrdering& ord);

struct SpiderProfile {
  int root;
  std::vector<std::vector<int>> legs;  // vertex sequences walking out from root
};

// Shape summary driving the bound dispatch. A tree carries a spider profile
// iff at most one vertex has degree >= 3; for paths the reported profile roots
// at the midpoint, but the even/three tags accept any valid rooting.
struct TreeStats {
  int leaf_count = 0;
  int max_pendant_path = 0;  // edges of the longest path with inner degrees 2 ending at a leaf
  std::optional<SpiderProfile> spider;
  int top_leaf_vertex = 0;  // vertex with the most adjacent leaves (tie: smallest)
  int top_leaf_count = 0;

  bool is_path = false;
  // Family cases of the coordinate-constrained embedding (min-degree bounds).
  bool pendant_family = false;      // 4 * max_pendant_path >= 3k - 1 (includes paths)
  bool many_leaves_family = false;  // 2 * leaf_count >= k - 1 (includes stars)
  bool even_spider_family = false;  // some valid rooting has all legs even
  bool three_spider_family = false; // some valid rooting has all legs of length 3
  // Concentrated-leaves case of the size bounds: 4 * top_leaf_count > 3k.
  bool dominant_leaf_family = false;

  bool any_spider_tag() const {
    return pendant_family || many_leaves_family || even_spider_family || three_spider_family;
  }
};

TreeStats tree_stats(const Tree& t);

// All trees with k edges, one per isomorphism class, 1 <= k <= 10. Generated
// from canonical rooted multisets, deduplicated by the centroid-rooted minimal
// level sequence, returned sorted by that code.
std::vector<Tree> enumerate_trees(int k);

// Centroid-rooted canonical level sequence (minimal concatenation order).
std::vector<int> canonical_code(const Tree& t);

}  // namespace rbx
