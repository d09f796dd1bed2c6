#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbx/auxgraph.hpp"
#include "rbx/coloring.hpp"
#include "rbx/subgraph.hpp"
#include "rbx/tree.hpp"

namespace rbx {

// Tree-to-host embedding: image[v] is the host vertex carrying tree vertex v.
struct Embedding {
  std::vector<int> image;
};

// Full validation: injective, every tree edge lands on an alive host edge,
// and all k edge colors are distinct (and present, i.e. not -1).
bool is_rainbow_embedding(const Graph& g, const EdgeColoring& phi, const Tree& t,
                          const Embedding& emb, const Bitset* edge_mask = nullptr);

enum class SearchStatus { found, absent, budget_exceeded };

struct RainbowOptions {
  const Bitset* edge_mask = nullptr;
  uint64_t budget_nodes = 200'000'000;
  // With the shortcut on, fewer alive colors than tree edges reports absent
  // without searching. Disable to force the exhaustive sweep.
  bool palette_shortcut = true;
};

struct RainbowResult {
  SearchStatus status = SearchStatus::absent;
  Embedding emb;       // meaningful when status == found
  uint64_t nodes = 0;  // candidate assignments tried
};

// Exhaustive backtracking search for a rainbow copy of t in (g, phi),
// restricted to alive edges when a mask is given. "absent" is a proof of
// absence; "found" comes with a validated embedding.
RainbowResult find_rainbow(const Graph& g, const EdgeColoring& phi, const Tree& t,
                           const RainbowOptions& opts = {});

// Plain (uncolored) containment via the identity coloring, where every
// embedding is rainbow.
bool contains_tree(const Graph& g, const Tree& t, const Bitset* edge_mask = nullptr,
                   uint64_t budget_nodes = 200'000'000);

// Greedy embedding on a hypercube host view with min degree >= k (over
// non-isolated vertices), using a family construction: at each step the new
// edge must avoid all previous colors and the coordinates of earlier edges
// linked to it in the constraint graph. Never backtracks; the two hypotheses
// make it total and injective. Throws ErrorKind::invariant_violation with a
// trace if either promise breaks.
Embedding coordinate_embed(const SubgraphView& host, const EdgeColoring& phi,
                           const Tree& t, const FamilyPlan& plan, int start_vertex);

// Greedy rainbow embedding under min degree >= 2k: avoid used vertices and
// used colors. Works on any host. Optional start edge pins ordering edge 1.
Embedding greedy_embed_min_degree(const SubgraphView& host, const EdgeColoring& phi,
                                  const Tree& t, int start_vertex,
                                  std::optional<int> start_edge = std::nullopt);

// Greedy rainbow embedding in a K_{2,r}-free host with min degree
// > 2k + r - 3, rooted at start_vertex, with the chord-free guarantee:
// x_i is adjacent to the root's image iff v_i is adjacent to the root.
Embedding k2r_embed(const SubgraphView& host, const EdgeColoring& phi, const Tree& t,
                    int root, int r, int start_vertex);

// Rainbow embedding of a tree whose designated vertex carries many leaves:
// embeds the leafless core with k2r_embed from a max-degree host vertex, then
// attaches the leaves greedily. Requires the host K_{2,r}-free with
// min degree > 2k' + r - 3 (k' = core edges) and max degree >= k.
Embedding embed_many_leaves(const SubgraphView& host, const EdgeColoring& phi,
                            const Tree& t, int r);

// A rainbow 4-edge path in a properly colored host that is triangle-free and
// has no two vertices with 3 common neighbors, anchored by a 2-edge path
// u-v-w with deg(u) >= 4 and deg(w) >= 3. Both host conditions are required:
// K_{4,4} under the xor coloring has no rainbow 4-edge path at all (the xor
// of four distinct colors from {0..3} is 0, but along a path it telescopes to
// the xor of the endpoints' part-labels, which is nonzero). Tries the direct
// extensions x-u-v-w-y first, then sweeps every 4-edge path. Throws
// ErrorKind::invariant_violation if none exists.
std::array<int, 5> rainbow_p4_witness(const Graph& g, const EdgeColoring& phi, int u,
                                      int v, int w);

// Shape certificate for triangle-free graphs that admit a proper coloring
// with no rainbow 3-edge path. Such graphs avoid the fork (3-leaf star with
// one edge subdivided), so every component is a star or has max degree <= 2
// (path/cycle); consequently e(G) <= |V(G)|.
struct P3Structure {
  bool fork_free = false;
  bool component_shape_ok = false;  // per component: star, or max degree <= 2
  bool edge_bound_ok = false;       // e <= |V| overall
  bool ok() const { return fork_free && component_shape_ok && edge_bound_ok; }
};

P3Structure certify_p3_structure(const Graph& g);

}  // namespace rbx
