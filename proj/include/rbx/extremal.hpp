#pragma once

// Desk-scale exact oracles for the rainbow extremal number ex*(G,T) and the
// rainbow minimum degree delta*(G,T), certified matching lower bounds,
// dispatch upper bounds, and minimum-degree subgraph extraction.
//
//   ex*(G,T)    = max edges of a subgraph of G admitting a proper edge
//                 coloring with no rainbow copy of T
//   delta*(G,T) = max min-degree (over non-isolated vertices) of such a
//                 subgraph

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbx/coloring.hpp"
#include "rbx/embedding.hpp"
#include "rbx/graph.hpp"
#include "rbx/subgraph.hpp"
#include "rbx/tree.hpp"

namespace rbx {

// Subgraph on which every proper vertex subset S spends more than (d/2)|S|
// edge endpoints, d = input average degree; in particular min degree > d/2.
// Obtained by deleting sets S with e_S <= (d/2)|S| (e_S = edges meeting S).
// Up to 14 vertices the deletion candidates are searched exhaustively, so the
// full subset condition holds on output; larger hosts fall back to deleting
// one low-degree vertex at a time (exhaustive = false) which guarantees only
// the min-degree consequence.
struct MinDegreeResult {
  SubgraphView sub;
  bool exhaustive = false;
};
MinDegreeResult min_degree_subgraph(const Graph& h);

enum class Quantity { exstar, deltastar };

// A lower-bound witness: a subgraph (host edge ids, ascending) and a proper
// coloring of it (aligned with edges) with no rainbow copy of the tree.
// checked is set only by revalidate_certificate.
struct Certificate {
  std::vector<int> edges;
  std::vector<int> colors;
  bool checked = false;
};

struct BoundReport {
  Quantity quantity = Quantity::exstar;
  std::string host;  // descriptor, filled by the caller
  std::string tree;
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  std::optional<Certificate> certificate;  // lower witness when available
  std::vector<std::string> provenance;     // which bound produced each side
};

// Re-derive a certificate's claims from scratch: valid edge ids, proper
// coloring, exhaustive rainbow-absence. Sets cert.checked on success.
bool revalidate_certificate(const Graph& g, const Tree& t, Certificate& cert,
                            uint64_t budget_nodes = 200'000'000);

struct ExactOptions {
  uint64_t budget = 50'000'000;  // shared partition + search-node budget
  int max_edges = 14;            // subset-sweep guard
};

// Exact ex*(G,T): sweep edge subsets by decreasing size; for each, look for a
// matching partition whose coloring has no rainbow T (exhaustive search).
// The first success ends the sweep; all larger sizes were fully refuted, so
// the value is exact. Budget exhaustion returns lower/upper with exact=false.
BoundReport exstar_exact(const Graph& g, const Tree& t, const ExactOptions& opt = {});

// Exact delta*(G,T): same sweep, grouped by subgraph min degree (non-isolated
// vertices) in decreasing order. The empty subgraph gives the value 0 floor.
BoundReport deltastar_exact(const Graph& g, const Tree& t, const ExactOptions& opt = {});

// Union of the first k-1 matchings colored by matching index: only k-1
// colors, so no k-edge pattern is ever rainbow. Matchings must be perfect
// and pairwise edge-disjoint.
Certificate matching_lower_bound(const Graph& g, const std::vector<Bitset>& matchings, int k);

// Any proper coloring makes a k-edge star at a degree->=k vertex rainbow.
// Returns the first such star (smallest center, smallest k edge ids), or
// nothing -- and then e(H) <= (k-1)/2 |V| holds by degree counting.
struct StarWitness {
  int center = -1;
  std::vector<int> edges;
};
std::optional<StarWitness> star_bound_witness(const Graph& h, const EdgeColoring& phi, int k);

// Bounds on ex*(G,T) without the exponential sweep. Lower: coordinate
// matchings on cube hosts, a greedy matching elsewhere. Upper: minimum over
// the applicable host/tree cases, each gated structurally; the degree-greedy
// bound (2k-1)|V| always applies.
BoundReport bound_exstar(const Graph& g, const Tree& t);

// Bounds on delta*(G,T). Lower: min(k-1, n) on cubes via coordinate
// matchings, a single matching elsewhere. Upper: k-1 when the tree belongs
// to a verified seed family on a cube host (the coordinate-lemma pipeline
// runs as the gate), otherwise min(2k-1, max degree).
BoundReport bound_deltastar(const Graph& g, const Tree& t);

}  // namespace rbx
