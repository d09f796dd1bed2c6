#include "rbx/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "rbx/io.hpp"

namespace rbx {

namespace {

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

EdgeColoring mask_coloring(const EdgeColoring& phi, const Bitset& mask) {
  EdgeColoring r;
  r.palette = phi.palette;
  r.color.assign(phi.color.size(), -1);
  mask.for_each([&](int e) { r.color[e] = phi.color[e]; });
  return r;
}

std::string trace_of(const Graph& g, const EdgeColoring& phi, const Tree& t,
                     const Embedding& emb) {
  std::string s;
  for (int i = 0; i < static_cast<int>(emb.image.size()); ++i) {
    s += std::to_string(i) + " " + std::to_string(emb.image[i]);
    if (i > 0 && i <= t.k) {
      int id = g.edge_id(emb.image[t.parent[i]], emb.image[i]);
      s += " " + std::to_string(id >= 0 ? phi.color[id] : -1);
    }
    s += "\n";
  }
  return s;
}

// Self-contained counterexample: section references first, then the instance
// in the standard formats, then the step trace and the failure detail.
std::string capture(const std::string& suite, uint64_t seed, const Graph& g,
                    const EdgeColoring* phi, const Tree* t, const std::string& trace,
                    const std::string& detail) {
  std::string s = "counterexample " + suite + "\nseed " + std::to_string(seed) + "\n";
  s += "host:\n" + graph_to_text(g);
  if (phi) s += "coloring:\n" + coloring_to_text(*phi);
  if (t) s += "tree:\n" + tree_to_text(*t);
  if (!trace.empty()) s += "trace:\n" + trace;
  s += "detail:\n" + detail + "\n";
  return s;
}

std::vector<TrialOutcome> run_trials(int trials,
                                     const std::function<TrialOutcome(int)>& one) {
  std::vector<TrialOutcome> out(static_cast<size_t>(std::max(trials, 0)));
  int workers = std::min(worker_cap(), std::max(trials, 1));
  if (workers <= 1) {
    for (int i = 0; i < trials; ++i) out[i] = one(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) out[i] = one(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::string hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
  return s;
}

SuiteReport finalize(const std::string& suite, std::vector<TrialOutcome> outs,
                     uint64_t checked, const std::string& save_dir) {
  SuiteReport rep;
  rep.suite = suite;
  rep.trials = static_cast<int>(outs.size());
  rep.checked = checked;
  rep.outcomes = std::move(outs);
  for (const TrialOutcome& o : rep.outcomes)
    if (!o.ok) ++rep.failures;
  persist_counterexamples(rep, save_dir);
  return rep;
}

// Union of k distinct coordinate matchings plus a sprinkle of extra cube
// edges; spanning and min degree >= k.
Bitset random_matching_union(const Graph& cube, int nmatch, Rng& rng, bool extras) {
  int dim = *cube.cube_dim();
  std::vector<int> coords(dim);
  for (int i = 0; i < dim; ++i) coords[i] = i;
  for (int i = dim - 1; i > 0; --i) std::swap(coords[i], coords[rng.below(i + 1)]);
  std::vector<Bitset> match = coordinate_matchings(cube);
  Bitset mask(cube.edge_count());
  for (int i = 0; i < nmatch; ++i) mask |= match[coords[i]];
  if (extras)
    for (int e = 0; e < cube.edge_count(); ++e)
      if (!mask.test(e) && rng.below(4) == 0) mask.set(e);
  return mask;
}

}  // namespace

void persist_counterexamples(SuiteReport& rep, const std::string& save_dir) {
  std::set<std::string> written;
  for (const TrialOutcome& o : rep.outcomes) {
    if (o.ok || o.counterexample.empty()) continue;
    std::string path = save_dir;
    if (!path.empty()) path += '/';
    path += "counterexample-";
    path += hex16(fnv1a64(o.counterexample));
    path += ".txt";
    if (written.insert(path).second) {
      write_text_file(path, o.counterexample);
      rep.saved.push_back(path);
    }
  }
}

int worker_cap() {
  if (const char* env = std::getenv("RBX_THREADS")) {
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

Graph fork_graph() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

SuiteReport suite_coordinate_lemma(const Graph& host, const Tree& t,
                                   const SuiteOptions& opt, std::optional<Family> fam) {
  if (!host.is_cube())
    fail_precondition("coordinate-lemma suite: host must be a hypercube");
  if (*host.cube_dim() < t.k)
    fail_precondition("coordinate-lemma suite: cube dimension below tree size");
  if (!fam) fam = pick_family(t);
  if (!fam) fail_precondition("coordinate-lemma suite: tree carries no family tag");
  const FamilyPlan plan = family_plan(t, *fam);

  auto one = [&](int i) {
    TrialOutcome out;
    out.seed = opt.seed + static_cast<uint64_t>(i);
    Rng rng(out.seed);
    Bitset mask = random_matching_union(host, t.k, rng, true);
    EdgeColoring phi = mask_coloring(random_proper_coloring(host, rng.next()), mask);
    int start = rng.below(host.vertex_count());
    try {
      Embedding emb = coordinate_embed(SubgraphView(host, mask), phi, t, plan, start);
      if (!is_rainbow_embedding(host, phi, t, emb, &mask)) {
        out.detail = "validator rejected the returned embedding";
        out.counterexample = capture("coordinate-lemma", out.seed, host, &phi, &t,
                                     trace_of(host, phi, t, emb), out.detail);
      } else {
        out.ok = true;
      }
    } catch (const Error& e) {
      out.detail = e.what();
      out.counterexample =
          capture("coordinate-lemma", out.seed, host, &phi, &t, "", out.detail);
    }
    return out;
  };
  auto outs = run_trials(opt.trials, one);
  uint64_t ok = 0;
  for (const auto& o : outs) ok += o.ok;
  return finalize("coordinate-lemma", std::move(outs), ok, opt.save_dir);
}

SuiteReport suite_greedy_2k(const SuiteOptions& opt) {
  auto one = [&](int i) {
    TrialOutcome out;
    out.seed = opt.seed + static_cast<uint64_t>(i);
    Rng rng(out.seed);
    int k = 2 + rng.below(4);
    std::vector<Tree> trees = enumerate_trees(k);
    Tree t = trees[rng.below(static_cast<int>(trees.size()))];

    // Random graph forced up to min degree 2k.
    int n = 4 * k + 2 + rng.below(2 * k);
    std::set<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next() & 1) edges.insert({u, v});
    std::vector<int> deg(n, 0);
    for (auto& [u, v] : edges) ++deg[u], ++deg[v];
    for (int v = 0; v < n; ++v)
      for (int w = 0; deg[v] < 2 * k && w < n; ++w)
        if (w != v && edges.insert({std::min(v, w), std::max(v, w)}).second)
          ++deg[v], ++deg[w];
    Graph g = Graph::from_edges(n, {edges.begin(), edges.end()});

    EdgeColoring phi = random_proper_coloring(g, rng.next());
    int start = rng.below(n);
    try {
      Embedding emb = greedy_embed_min_degree(SubgraphView(g), phi, t, start);
      if (!is_rainbow_embedding(g, phi, t, emb)) {
        out.detail = "validator rejected the returned embedding";
        out.counterexample = capture("greedy-2k", out.seed, g, &phi, &t,
                                     trace_of(g, phi, t, emb), out.detail);
      } else {
        out.ok = true;
      }
    } catch (const Error& e) {
      out.detail = e.what();
      out.counterexample = capture("greedy-2k", out.seed, g, &phi, &t, "", out.detail);
    }
    return out;
  };
  auto outs = run_trials(opt.trials, one);
  uint64_t ok = 0;
  for (const auto& o : outs) ok += o.ok;
  return finalize("greedy-2k", std::move(outs), ok, opt.save_dir);
}

SuiteReport suite_xor_hampath(int p, const std::string& save_dir) {
  // p=1 is outside the lemma: a single edge is trivially rainbow. The parity
  // argument needs the nonzero labels to xor to 0, which holds iff p >= 2.
  if (p < 2 || p > 3)
    fail_precondition("xor suite: p must be 2 or 3 (2^p! sequences)");
  auto [g, phi] = xor_coloring(p);
  int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  uint64_t paths = 0;
  TrialOutcome out;
  out.seed = 0;
  out.ok = true;
  do {
    if (perm[0] > perm[n - 1]) continue;  // count each path once, not per direction
    ++paths;
    uint32_t seen = 0;
    bool rainbow = true;
    for (int i = 0; i + 1 < n && rainbow; ++i) {
      int c = phi.color[g.edge_id(perm[i], perm[i + 1])];
      if (seen >> c & 1) rainbow = false;
      seen |= 1u << c;
    }
    if (rainbow) {
      out.ok = false;
      out.detail = "rainbow spanning path:";
      for (int v : perm) out.detail += " " + std::to_string(v);
      Tree hp = tree_path(n - 1);
      Embedding emb{perm};
      out.counterexample = capture("xor-no-rainbow-hampath", 0, g, &phi, &hp,
                                   trace_of(g, phi, hp, emb), out.detail);
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return finalize("xor-no-rainbow-hampath", {out}, paths, save_dir);
}

SuiteReport suite_fork(const std::string& save_dir) {
  Graph fork = fork_graph();
  Tree p3 = tree_path(3);
  uint64_t partitions = 0;
  TrialOutcome out;
  out.seed = 0;
  out.ok = true;
  enumerate_matching_partitions(fork, [&](const EdgeColoring& phi) {
    ++partitions;
    RainbowResult r = find_rainbow(fork, phi, p3);
    if (r.status != SearchStatus::found) {
      out.ok = false;
      out.detail = "matching partition with no rainbow 3-edge path; colors:";
      for (int c : phi.color) out.detail += " " + std::to_string(c);
      out.counterexample = capture("fork", 0, fork, &phi, &p3, "", out.detail);
      return false;
    }
    return true;
  });
  return finalize("fork", {out}, partitions, save_dir);
}

SuiteReport suite_p4_lemma(const SuiteOptions& opt) {
  Tree p4 = tree_path(4);
  auto one = [&](int i) {
    TrialOutcome out;
    out.seed = opt.seed + static_cast<uint64_t>(i);
    Rng rng(out.seed);
    int dim = 4 + rng.below(2);
    Graph cube = Graph::hypercube(dim);

    // Keep each cube edge with probability 4/5 until an anchored cherry
    // u-v-w with deg(u) >= 4, deg(w) >= 3 survives (first attempt almost
    // always works; the loop keeps the trial deterministic).
    Graph g = cube;
    int au = -1, av = -1, aw = -1;
    for (int attempt = 0; attempt < 64 && au < 0; ++attempt) {
      std::vector<std::pair<int, int>> kept;
      for (int e = 0; e < cube.edge_count(); ++e)
        if (rng.below(5) != 0) kept.push_back({cube.edge(e).u, cube.edge(e).v});
      Graph h = Graph::from_edges(cube.vertex_count(), kept);
      for (int v = 0; v < h.vertex_count() && au < 0; ++v)
        for (const IncEntry& iu : h.adj(v)) {
          if (h.degree(iu.nbr) < 4) continue;
          for (const IncEntry& iw : h.adj(v))
            if (iw.nbr != iu.nbr && h.degree(iw.nbr) >= 3) {
              au = iu.nbr, av = v, aw = iw.nbr;
              break;
            }
          if (au >= 0) break;
        }
      if (au >= 0) g = std::move(h);
    }
    if (au < 0) {
      out.detail = "no anchored instance after 64 attempts";
      return out;
    }
    EdgeColoring phi = random_proper_coloring(g, rng.next());
    try {
      std::array<int, 5> w = rainbow_p4_witness(g, phi, au, av, aw);
      Embedding emb{{w.begin(), w.end()}};
      if (!is_rainbow_embedding(g, phi, p4, emb)) {
        out.detail = "validator rejected the returned 4-edge path";
        out.counterexample = capture("p4-lemma", out.seed, g, &phi, &p4,
                                     trace_of(g, phi, p4, emb), out.detail);
      } else {
        out.ok = true;
      }
    } catch (const Error& e) {
      out.detail = e.what();
      out.counterexample = capture("p4-lemma", out.seed, g, &phi, &p4, "", out.detail);
    }
    return out;
  };
  auto outs = run_trials(opt.trials, one);
  uint64_t ok = 0;
  for (const auto& o : outs) ok += o.ok;
  return finalize("p4-lemma", std::move(outs), ok, opt.save_dir);
}

SuiteReport suite_k2r_embed(const SuiteOptions& opt) {
  Graph cube = Graph::hypercube(8);
  const int r = 3;
  auto one = [&](int i) {
    TrialOutcome out;
    out.seed = opt.seed + static_cast<uint64_t>(i);
    Rng rng(out.seed);
    int k = 1 + rng.below(3);
    std::vector<Tree> trees = enumerate_trees(k);
    Tree t = trees[rng.below(static_cast<int>(trees.size()))];
    // min degree > 2k + r - 3 = 2k: union of at least 2k+1 matchings.
    int nmatch = 2 * k + 1 + rng.below(8 - 2 * k);
    Rng mrng(rng.next());
    Bitset mask = random_matching_union(cube, nmatch, mrng, false);
    EdgeColoring phi = mask_coloring(random_proper_coloring(cube, rng.next()), mask);
    int start = rng.below(cube.vertex_count());
    try {
      Embedding emb = k2r_embed(SubgraphView(cube, mask), phi, t, 0, r, start);
      bool good = is_rainbow_embedding(cube, phi, t, emb, &mask);
      for (int v = 1; good && v <= t.k; ++v) {
        int id = cube.edge_id(emb.image[0], emb.image[v]);
        bool adj = id >= 0 && mask.test(id);
        if (adj != (t.parent[v] == 0)) good = false;
      }
      if (!good) {
        out.detail = "validator rejected the embedding or the root-adjacency guarantee";
        out.counterexample = capture("k2r-embed", out.seed, cube, &phi, &t,
                                     trace_of(cube, phi, t, emb), out.detail);
      } else {
        out.ok = true;
      }
    } catch (const Error& e) {
      out.detail = e.what();
      out.counterexample = capture("k2r-embed", out.seed, cube, &phi, &t, "", out.detail);
    }
    return out;
  };
  auto outs = run_trials(opt.trials, one);
  uint64_t ok = 0;
  for (const auto& o : outs) ok += o.ok;
  return finalize("k2r-embed", std::move(outs), ok, opt.save_dir);
}

}  // namespace rbx
