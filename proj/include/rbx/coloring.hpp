#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rbx/graph.hpp"

namespace rbx {

// Proper edge coloring, indexed by parent edge id. color[e] == -1 means the
// edge is outside the colored view (colorings restricted to subgraph views
// keep full-length arrays). Color ids of a full coloring are 0..palette-1
// with every id used.
struct EdgeColoring {
  std::vector<int> color;
  int palette = 0;
};

// True iff no two edges sharing a vertex have the same color. Only edges in
// the mask are considered when one is given; uncolored (-1) edges are ignored.
bool is_proper(const Graph& g, const EdgeColoring& phi, const Bitset* mask = nullptr);

// Number of distinct colors appearing on (masked) edges.
int palette_used(const Graph& g, const EdgeColoring& phi, const Bitset* mask = nullptr);

// Structural invariant for a full coloring: every edge colored, ids in range,
// every id in 0..palette-1 used, and properness.
bool coloring_invariant_ok(const Graph& g, const EdgeColoring& phi);

// The coloring by hypercube coordinate: color(e) = coordinate of e. Proper,
// palette n, classes are the coordinate matchings.
EdgeColoring coordinate_coloring(const Graph& g);

// K_{2^p} with the xor coloring color(x, y) = (x xor y) - 1. Proper, palette
// 2^p - 1, every class a perfect matching. 1 <= p <= 6.
std::pair<Graph, EdgeColoring> xor_coloring(int p);

// Partition enumeration: every partition of the (masked) edge set into
// matchings, exactly once up to color relabeling. Canonical form: edges are
// assigned in ascending id order, and an edge either joins an existing class
// (no shared vertex with its members) or opens class max+1, so classes come
// out ordered by minimum edge id.
enum class EnumStatus { completed, budget_exhausted, stopped_by_caller };

struct EnumResult {
  EnumStatus status;
  uint64_t yielded = 0;
};

// visit returns false to stop early. max_yield bounds the number of
// partitions produced (partial enumeration reported as budget_exhausted).
// Without a budget the edge count is guarded at 16.
EnumResult enumerate_matching_partitions(const Graph& g,
                                         const std::function<bool(const EdgeColoring&)>& visit,
                                         const Bitset* mask = nullptr,
                                         std::optional<uint64_t> max_yield = std::nullopt);

// Convenience: collect all partitions (same guard).
std::vector<EdgeColoring> all_matching_partitions(const Graph& g, const Bitset* mask = nullptr);

// Seeded greedy proper coloring: random edge order, least free color per
// edge. With a palette cap, infeasibility raises ErrorKind::infeasible
// (never returns an improper coloring). Deterministic for a fixed seed.
EdgeColoring random_proper_coloring(const Graph& g, uint64_t seed,
                                    std::optional<int> palette_cap = std::nullopt);

}  // namespace rbx
