#pragma once
// Verification suites behind the `verify` subcommands: randomized trials of
// the embedding routines plus two exhaustive checks (xor colorings, the fork
// graph). Trials are independent tasks keyed by trial index, run on a worker
// pool capped by RBX_THREADS; reports reduce deterministically by index, so
// output is identical regardless of worker count. A failing trial serializes
// its instance (standard text formats) plus the step trace into a
// counterexample file named by content hash.

#include <cstdint>
#include <string>
#include <vector>

#include "rbx/auxgraph.hpp"
#include "rbx/embedding.hpp"

namespace rbx {

struct TrialOutcome {
  uint64_t seed = 0;
  bool ok = false;
  std::string detail;          // failure explanation; empty when ok
  std::string counterexample;  // serialized failing instance; empty when ok
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  uint64_t checked = 0;                // suite-specific unit count (embeddings, paths, partitions)
  std::vector<TrialOutcome> outcomes;  // indexed by trial
  std::vector<std::string> saved;      // counterexample files written
  bool pass() const { return failures == 0; }
};

struct SuiteOptions {
  int trials = 100;
  uint64_t seed = 1;
  std::string save_dir;  // counterexample directory; "" = working directory
};

// Worker cap: RBX_THREADS when set (clamped to >= 1), else hardware threads.
int worker_cap();

// Writes each failing outcome's serialized instance to
// `<save_dir>/counterexample-<fnv1a64 hex>.txt` (working directory when
// save_dir is empty), deduplicated by content, recording paths in rep.saved.
void persist_counterexamples(SuiteReport& rep, const std::string& save_dir);

// Random coordinate-matching unions of the host cube plus extra cube edges
// (min degree >= t.k by construction), random proper colorings, random start
// vertices; runs coordinate_embed and validates every embedding
// independently. The plan family defaults to the tree's preferred tag;
// `fam` forces a specific one (the tree must carry it) so each family's
// construction can be exercised even where another tag takes priority.
SuiteReport suite_coordinate_lemma(const Graph& host, const Tree& t, const SuiteOptions& opt,
                                   std::optional<Family> fam = std::nullopt);

// Random hosts with min degree >= 2k for random trees with k <= 5 edges;
// runs greedy_embed_min_degree and validates.
SuiteReport suite_greedy_2k(const SuiteOptions& opt);

// Exhaustive: the complete graph on 2^p vertices colored by coordinate-xor
// has no rainbow spanning path. Enumerates all vertex sequences (reversal
// deduplicated); p <= 3.
SuiteReport suite_xor_hampath(int p, const std::string& save_dir = "");

// Exhaustive: every matching partition of the fork contains a rainbow 3-edge
// path.
SuiteReport suite_fork(const std::string& save_dir = "");

// Random cube subgraphs keeping an anchored cherry u-v-w with deg(u) >= 4,
// deg(w) >= 3; runs rainbow_p4_witness and validates the returned path.
SuiteReport suite_p4_lemma(const SuiteOptions& opt);

// Random coordinate-matching unions of Q_8 with min degree > 2k, random
// trees with k <= 3 edges; runs k2r_embed (r = 3) and validates both the
// embedding and the root-adjacency guarantee.
SuiteReport suite_k2r_embed(const SuiteOptions& opt);

// The fork: a 3-edge star with one edge extended to a 2-edge path.
Graph fork_graph();

}  // namespace rbx
