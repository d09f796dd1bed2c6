#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbx/tree.hpp"

namespace rbx {

// Exact chromatic number of a small graph given as adjacency rows over
// vertices 0..n-1 (n <= 20). Clique seed + branch and bound.
int chromatic_number_small(int n, const std::vector<uint32_t>& rows);

// Constraint graph over ordering positions 1..k. "seed" edges are chosen by a
// construction; "full" adds a link between every pair of positions whose tree
// edges share a vertex. Row bit j of seed[i]/full[i] marks the pair {i, j}.
struct AuxGraph {
  int k = 0;
  std::vector<uint64_t> seed;  // indexed 0..k, index 0 unused
  std::vector<uint64_t> full;

  bool seed_link(int i, int j) const { return (seed[i] >> j) & 1; }
  bool full_link(int i, int j) const { return (full[i] >> j) & 1; }
  // Seed degree of position j towards earlier positions.
  int seed_earlier(int j) const {
    return __builtin_popcountll(seed[j] & ((uint64_t(1) << j) - 1));
  }
};

// Builds the graph from chosen seed pairs {i, j} of positions; intersection
// links are derived from the tree. Requires 1 <= k <= 63.
AuxGraph build_aux_graph(const Tree& t, const LeafOrdering& ord,
                         const std::vector<std::pair<int, int>>& seed_pairs);

// Ordering position of a tree edge {u, v}: the position of its later vertex.
int edge_position(const LeafOrdering& ord, int u, int v);

// The two hypotheses the constrained greedy embedding needs:
//  - degree: every position j has seed degree towards earlier positions
//    at most k - j;
//  - chromatic: for every path in the tree with an even number 2l >= 2 of
//    edges, the full graph induced on those edge positions has chromatic
//    number at least l + 1.
struct HypothesisViolation {
  enum class Kind { degree, chromatic };
  Kind kind;
  std::vector<int> positions;  // offending position (degree) or window (chromatic)
  int required = 0;
  int got = 0;
  std::string describe() const;
};

std::optional<HypothesisViolation> check_coordinate_hypotheses(const Tree& t,
                                                               const LeafOrdering& ord,
                                                               const AuxGraph& aux);

// Tree families with a construction that passes both hypotheses.
enum class Family { path, pendant_path, many_leaves, even_spider, three_spider };

const char* family_name(Family f);

struct FamilyPlan {
  Family family;
  LeafOrdering ord;
  AuxGraph aux;
};

// Builds the ordering and seed set for the requested family; throws
// ErrorKind::precondition if the tree does not belong to it. The result is
// checked against both hypotheses before returning (invariant violation if a
// construction rule is broken).
FamilyPlan family_plan(const Tree& t, Family f);

// Picks a family the tree belongs to (fixed priority), or nullopt.
std::optional<Family> pick_family(const Tree& t);
std::optional<Family> pick_family(const TreeStats& stats);

}  // namespace rbx
