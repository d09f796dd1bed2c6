#include "rbx/embedding.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rbx {

namespace {

bool view_adjacent(const SubgraphView& host, int a, int b) {
  if (!host.has_vertex(a) || !host.has_vertex(b)) return false;
  int id = host.parent->edge_id(a, b);
  return id >= 0 && host.has_edge(id);
}

std::string step_trace(const LeafOrdering& ord, const std::vector<int>& img,
                       const EdgeColoring& phi, const Graph& g, int upto) {
  std::string s;
  for (int i = 0; i <= upto; ++i) {
    s += std::to_string(i) + " " + std::to_string(img[i]);
    if (i > 0) {
      int id = g.edge_id(img[ord.parent_pos[i]], img[i]);
      s += " " + std::to_string(id >= 0 ? phi.color[id] : -1);
    }
    s += "\n";
  }
  return s;
}

}  // namespace

bool is_rainbow_embedding(const Graph& g, const EdgeColoring& phi, const Tree& t,
                          const Embedding& emb, const Bitset* edge_mask) {
  if (static_cast<int>(emb.image.size()) != t.k + 1) return false;
  if (static_cast<int>(phi.color.size()) != g.edge_count()) return false;
  std::vector<char> used_v(g.vertex_count(), 0);
  for (int v = 0; v <= t.k; ++v) {
    int x = emb.image[v];
    if (x < 0 || x >= g.vertex_count() || used_v[x]) return false;
    used_v[x] = 1;
  }
  std::set<int> colors;
  for (int v = 1; v <= t.k; ++v) {
    int id = g.edge_id(emb.image[v], emb.image[t.parent[v]]);
    if (id < 0) return false;
    if (edge_mask && !edge_mask->test(id)) return false;
    int c = phi.color[id];
    if (c < 0 || !colors.insert(c).second) return false;
  }
  return true;
}

RainbowResult find_rainbow(const Graph& g, const EdgeColoring& phi, const Tree& t,
                           const RainbowOptions& opts) {
  if (static_cast<int>(phi.color.size()) != g.edge_count())
    fail_precondition("find_rainbow: coloring size mismatch");
  RainbowResult res;
  int k = t.k;
  if (opts.palette_shortcut) {
    std::set<int> alive;
    for (int id = 0; id < g.edge_count(); ++id) {
      if (opts.edge_mask && !opts.edge_mask->test(id)) continue;
      if (phi.color[id] >= 0) alive.insert(phi.color[id]);
    }
    if (static_cast<int>(alive.size()) < k) return res;  // absent
  }
  LeafOrdering ord = leaf_ordering(t, 0);
  std::vector<int> img(k + 1, -1);
  std::vector<char> used_v(g.vertex_count(), 0), used_c(phi.palette, 0);
  bool exceeded = false;

  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos > k) return true;
    int v = img[ord.parent_pos[pos]];
    for (const IncEntry& in : g.adj(v)) {
      if (exceeded) return false;
      if (++res.nodes > opts.budget_nodes) {
        exceeded = true;
        return false;
      }
      if (used_v[in.nbr]) continue;
      if (opts.edge_mask && !opts.edge_mask->test(in.edge)) continue;
      int c = phi.color[in.edge];
      if (c < 0 || used_c[c]) continue;
      img[pos] = in.nbr;
      used_v[in.nbr] = 1;
      used_c[c] = 1;
      if (self(self, pos + 1)) return true;
      used_v[in.nbr] = 0;
      used_c[c] = 0;
      img[pos] = -1;
    }
    return false;
  };

  for (int start = 0; start < g.vertex_count() && !exceeded; ++start) {
    img[0] = start;
    used_v[start] = 1;
    if (rec(rec, 1)) {
      res.emb.image.assign(k + 1, -1);
      for (int i = 0; i <= k; ++i) res.emb.image[ord.order[i]] = img[i];
      if (!is_rainbow_embedding(g, phi, t, res.emb, opts.edge_mask))
        fail_invariant("find_rainbow: produced embedding failed validation");
      res.status = SearchStatus::found;
      return res;
    }
    used_v[start] = 0;
  }
  res.status = exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent;
  return res;
}

bool contains_tree(const Graph& g, const Tree& t, const Bitset* edge_mask,
                   uint64_t budget_nodes) {
  EdgeColoring id;
  id.palette = std::max(1, g.edge_count());
  id.color.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) id.color[e] = e;
  RainbowOptions opts;
  opts.edge_mask = edge_mask;
  opts.budget_nodes = budget_nodes;
  RainbowResult r = find_rainbow(g, id, t, opts);
  if (r.status == SearchStatus::budget_exceeded)
    fail_resource("contains_tree: node budget exhausted");
  return r.status == SearchStatus::found;
}

Embedding coordinate_embed(const SubgraphView& host, const EdgeColoring& phi,
                           const Tree& t, const FamilyPlan& plan, int start_vertex) {
  const Graph& g = *host.parent;
  if (!g.is_cube()) fail_precondition("coordinate_embed: host must be a hypercube view");
  if (static_cast<int>(phi.color.size()) != g.edge_count())
    fail_precondition("coordinate_embed: coloring size mismatch");
  int k = t.k;
  if (host.min_degree_nonisolated() < k)
    fail_precondition("coordinate_embed: view min degree below tree size");
  if (!host.has_vertex(start_vertex) || host.degree(start_vertex) < k)
    fail_precondition("coordinate_embed: bad start vertex");

  const LeafOrdering& ord = plan.ord;
  std::vector<int> img(k + 1, -1), coord_of(k + 1, -1);
  std::vector<char> used_c(phi.palette, 0);
  img[0] = start_vertex;
  for (int i = 1; i <= k; ++i) {
    int v = img[ord.parent_pos[i]];
    uint32_t banned = 0;
    for (int j = 1; j < i; ++j)
      if (plan.aux.full_link(i, j)) banned |= 1u << coord_of[j];
    int chosen = -1, chosen_edge = -1;
    for (const IncEntry& in : g.adj(v)) {
      if (!host.has_edge(in.edge) || !host.has_vertex(in.nbr)) continue;
      int c = phi.color[in.edge];
      if (c < 0 || used_c[c]) continue;
      if (banned >> g.edge(in.edge).coord & 1) continue;
      chosen = in.nbr;
      chosen_edge = in.edge;
      break;
    }
    if (chosen < 0)
      fail_invariant("coordinate_embed: no admissible edge at position " + std::to_string(i),
                     step_trace(ord, img, phi, g, i - 1));
    img[i] = chosen;
    coord_of[i] = g.edge(chosen_edge).coord;
    used_c[phi.color[chosen_edge]] = 1;
  }
  // Injectivity is a consequence of the chromatic hypothesis, not of the
  // greedy itself: check it and report a full trace if it ever breaks.
  std::vector<char> seen(g.vertex_count(), 0);
  for (int i = 0; i <= k; ++i) {
    if (seen[img[i]])
      fail_invariant("coordinate_embed: image not injective at position " + std::to_string(i),
                     step_trace(ord, img, phi, g, k));
    seen[img[i]] = 1;
  }
  Embedding emb;
  emb.image.assign(k + 1, -1);
  for (int i = 0; i <= k; ++i) emb.image[ord.order[i]] = img[i];
  if (!is_rainbow_embedding(g, phi, t, emb, &host.edges))
    fail_invariant("coordinate_embed: embedding failed validation",
                   step_trace(ord, img, phi, g, k));
  return emb;
}

Embedding greedy_embed_min_degree(const SubgraphView& host, const EdgeColoring& phi,
                                  const Tree& t, int start_vertex,
                                  std::optional<int> start_edge) {
  const Graph& g = *host.parent;
  if (static_cast<int>(phi.color.size()) != g.edge_count())
    fail_precondition("greedy_embed_min_degree: coloring size mismatch");
  int k = t.k;
  if (host.min_degree_nonisolated() < 2 * k)
    fail_precondition("greedy_embed_min_degree: view min degree below 2k");

  LeafOrdering ord = leaf_ordering(t, 0);
  std::vector<int> img(k + 1, -1);
  std::vector<char> used_v(g.vertex_count(), 0), used_c(phi.palette, 0);
  int first = 1;
  if (start_edge) {
    int id = *start_edge;
    if (id < 0 || id >= g.edge_count() || !host.has_edge(id))
      fail_precondition("greedy_embed_min_degree: bad start edge");
    const Edge& e = g.edge(id);
    img[0] = e.u;
    img[1] = e.v;
    used_v[e.u] = used_v[e.v] = 1;
    used_c[phi.color[id]] = 1;
    first = 2;
  } else {
    if (!host.has_vertex(start_vertex) || host.degree(start_vertex) < 2 * k)
      fail_precondition("greedy_embed_min_degree: bad start vertex");
    img[0] = start_vertex;
    used_v[start_vertex] = 1;
  }
  for (int i = first; i <= k; ++i) {
    int v = img[ord.parent_pos[i]];
    int chosen = -1;
    for (const IncEntry& in : g.adj(v)) {
      if (!host.has_edge(in.edge) || !host.has_vertex(in.nbr) || used_v[in.nbr]) continue;
      int c = phi.color[in.edge];
      if (c < 0 || used_c[c]) continue;
      chosen = in.nbr;
      used_c[c] = 1;
      break;
    }
    if (chosen < 0)
      fail_invariant("greedy_embed_min_degree: stuck at position " + std::to_string(i),
                     step_trace(ord, img, phi, g, i - 1));
    img[i] = chosen;
    used_v[chosen] = 1;
  }
  Embedding emb;
  emb.image.assign(k + 1, -1);
  for (int i = 0; i <= k; ++i) emb.image[ord.order[i]] = img[i];
  if (!is_rainbow_embedding(g, phi, t, emb, &host.edges))
    fail_invariant("greedy_embed_min_degree: embedding failed validation");
  return emb;
}

Embedding k2r_embed(const SubgraphView& host, const EdgeColoring& phi, const Tree& t,
                    int root, int r, int start_vertex) {
  const Graph& g = *host.parent;
  if (static_cast<int>(phi.color.size()) != g.edge_count())
    fail_precondition("k2r_embed: coloring size mismatch");
  if (r < 2) fail_precondition("k2r_embed: r >= 2 required");
  int k = t.k;
  if (host.min_degree_nonisolated() <= 2 * k + r - 3)
    fail_precondition("k2r_embed: view min degree must exceed 2k+r-3");
  if (!host.has_vertex(start_vertex))
    fail_precondition("k2r_embed: bad start vertex");

  LeafOrdering ord = leaf_ordering(t, root);
  std::vector<int> img(k + 1, -1);
  std::vector<char> used_v(g.vertex_count(), 0), used_c(phi.palette, 0);
  img[0] = start_vertex;
  used_v[start_vertex] = 1;
  for (int i = 1; i <= k; ++i) {
    int ip = ord.parent_pos[i];
    int v = img[ip];
    int chosen = -1;
    for (const IncEntry& in : g.adj(v)) {
      if (!host.has_edge(in.edge) || !host.has_vertex(in.nbr) || used_v[in.nbr]) continue;
      int c = phi.color[in.edge];
      if (c < 0 || used_c[c]) continue;
      // Vertices not adjacent to the root in the tree must avoid the root's
      // neighborhood in the host.
      if (ip != 0 && view_adjacent(host, in.nbr, start_vertex)) continue;
      chosen = in.nbr;
      used_c[c] = 1;
      break;
    }
    if (chosen < 0)
      fail_invariant("k2r_embed: stuck at position " + std::to_string(i),
                     step_trace(ord, img, phi, g, i - 1));
    img[i] = chosen;
    used_v[chosen] = 1;
  }
  for (int i = 1; i <= k; ++i) {
    bool tree_adj = (ord.parent_pos[i] == 0);
    if (view_adjacent(host, img[i], start_vertex) != tree_adj)
      fail_invariant("k2r_embed: root adjacency not preserved at position " + std::to_string(i),
                     step_trace(ord, img, phi, g, k));
  }
  Embedding emb;
  emb.image.assign(k + 1, -1);
  for (int i = 0; i <= k; ++i) emb.image[ord.order[i]] = img[i];
  if (!is_rainbow_embedding(g, phi, t, emb, &host.edges))
    fail_invariant("k2r_embed: embedding failed validation");
  return emb;
}

Embedding embed_many_leaves(const SubgraphView& host, const EdgeColoring& phi,
                            const Tree& t, int r) {
  const Graph& g = *host.parent;
  TreeStats stats = tree_stats(t);
  int v0 = stats.top_leaf_vertex;
  int k = t.k;

  // Leaves hanging at v0 come last; the rest is the core.
  std::vector<int> leaves;
  for (int w : t.adj[v0])
    if (t.degree(w) == 1) leaves.push_back(w);
  int kp = k - static_cast<int>(leaves.size());

  // Host max-degree vertex carries v0.
  int x0 = -1, best = -1;
  host.vertices.for_each([&](int v) {
    int d = host.degree(v);
    if (d > best) {
      best = d;
      x0 = v;
    }
  });
  if (best < k) fail_precondition("embed_many_leaves: host max degree below tree size");

  Embedding emb;
  emb.image.assign(k + 1, -1);
  std::vector<char> used_v(g.vertex_count(), 0), used_c(phi.palette, 0);
  if (kp == 0) {
    emb.image[v0] = x0;
    used_v[x0] = 1;
  } else {
    // Core tree relabeled with v0 -> 0, breadth-first.
    std::vector<char> drop(k + 1, 0);
    for (int w : leaves) drop[w] = 1;
    std::vector<int> core{v0}, fwd(k + 1, -1), cpar{-1};
    fwd[v0] = 0;
    for (size_t h = 0; h < core.size(); ++h)
      for (int w : t.adj[core[h]])
        if (!drop[w] && fwd[w] < 0) {
          fwd[w] = static_cast<int>(core.size());
          core.push_back(w);
          cpar.push_back(static_cast<int>(h));
        }
    Tree core_tree = make_tree(cpar);
    Embedding core_emb = k2r_embed(host, phi, core_tree, 0, r, x0);
    for (size_t i = 0; i < core.size(); ++i) {
      emb.image[core[i]] = core_emb.image[i];
      used_v[core_emb.image[i]] = 1;
    }
    for (size_t i = 1; i < core.size(); ++i) {
      int id = g.edge_id(core_emb.image[i], core_emb.image[cpar[i]]);
      used_c[phi.color[id]] = 1;
    }
  }

  for (int leaf : leaves) {
    int chosen = -1;
    for (const IncEntry& in : g.adj(x0)) {
      if (!host.has_edge(in.edge) || !host.has_vertex(in.nbr) || used_v[in.nbr]) continue;
      int c = phi.color[in.edge];
      if (c < 0 || used_c[c]) continue;
      chosen = in.nbr;
      used_c[c] = 1;
      break;
    }
    if (chosen < 0)
      fail_invariant("embed_many_leaves: no free leaf slot at vertex " + std::to_string(leaf));
    emb.image[leaf] = chosen;
    used_v[chosen] = 1;
  }
  if (!is_rainbow_embedding(g, phi, t, emb, &host.edges))
    fail_invariant("embed_many_leaves: embedding failed validation");
  return emb;
}

std::array<int, 5> rainbow_p4_witness(const Graph& g, const EdgeColoring& phi, int u,
                                      int v, int w) {
  if (!g.adjacent(u, v) || !g.adjacent(v, w) || u == w)
    fail_precondition("rainbow_p4_witness: u-v-w must be a 2-edge path");
  if (g.degree(u) < 4 || g.degree(w) < 3)
    fail_precondition("rainbow_p4_witness: need deg(u) >= 4 and deg(w) >= 3");
  if (!forbidden_subgraph_check(g, Pattern::triangle()))
    fail_precondition("rainbow_p4_witness: host must be triangle-free");
  if (g.max_common_neighbors() > 2)
    fail_precondition("rainbow_p4_witness: host must have no 3 common neighbors");
  int c1 = phi.color[g.edge_id(u, v)];
  int c2 = phi.color[g.edge_id(v, w)];

  auto validate = [&](std::array<int, 5> p) {
    std::set<int> vs(p.begin(), p.end()), cs;
    if (vs.size() != 5) return false;
    for (int i = 0; i < 4; ++i) {
      int id = g.edge_id(p[i], p[i + 1]);
      if (id < 0 || !cs.insert(phi.color[id]).second) return false;
    }
    return true;
  };

  // Direct extensions x-u-v-w-y of the anchor path.
  for (const IncEntry& xu : g.adj(u)) {
    int x = xu.nbr;
    if (x == v || x == w) continue;
    int cx = phi.color[xu.edge];
    if (cx == c2) continue;  // cx != c1 by properness at u
    for (const IncEntry& wy : g.adj(w)) {
      int y = wy.nbr;
      if (y == v || y == u || y == x) continue;
      int cy = phi.color[wy.edge];
      if (cy == cx || cy == c1) continue;  // cy != c2 by properness at w
      std::array<int, 5> p{x, u, v, w, y};
      if (validate(p)) return p;
    }
  }
  // Exhaustive sweep over all 4-edge rainbow paths.
  for (const Edge& mid : g.edges()) {
    int a = mid.u, b = mid.v;
    int cm = phi.color[g.edge_id(a, b)];
    for (int flip = 0; flip < 2; ++flip) {
      if (flip) std::swap(a, b);
      for (const IncEntry& ap : g.adj(a)) {
        if (ap.nbr == b) continue;
        int cp = phi.color[ap.edge];
        if (cp == cm) continue;
        for (const IncEntry& bs : g.adj(b)) {
          if (bs.nbr == a || bs.nbr == ap.nbr) continue;
          int cs = phi.color[bs.edge];
          if (cs == cm || cs == cp) continue;
          for (const IncEntry& pq : g.adj(ap.nbr)) {
            int q = pq.nbr;
            if (q == a || q == b || q == bs.nbr) continue;
            int cq = phi.color[pq.edge];
            if (cq == cm || cq == cp || cq == cs) continue;
            std::array<int, 5> p{q, ap.nbr, a, b, bs.nbr};
            if (validate(p)) return p;
          }
        }
      }
    }
  }
  fail_invariant("rainbow_p4_witness: no rainbow 4-edge path found");
}

P3Structure certify_p3_structure(const Graph& g) {
  P3Structure cert;
  Tree fork = make_tree({-1, 0, 0, 0, 3});
  cert.fork_free = !contains_tree(g, fork);

  cert.component_shape_ok = true;
  std::vector<int> comp(g.vertex_count(), -1);
  int nc = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (const IncEntry& in : g.adj(x))
        if (comp[in.nbr] < 0) {
          comp[in.nbr] = nc;
          stack.push_back(in.nbr);
        }
    }
    ++nc;
    std::vector<int> hubs;
    for (int x : members)
      if (g.degree(x) >= 3) hubs.push_back(x);
    if (hubs.size() > 1) cert.component_shape_ok = false;
    if (hubs.size() == 1)
      for (const IncEntry& in : g.adj(hubs[0]))
        if (g.degree(in.nbr) != 1) cert.component_shape_ok = false;
  }
  cert.edge_bound_ok = g.edge_count() <= g.vertex_count();
  return cert;
}

}  // namespace rbx
