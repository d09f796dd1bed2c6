#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "rbx/embedding.hpp"

using namespace rbx;

namespace {

// Independent oracle: does a rainbow copy of t exist? Exhaustive over all
// injective order-respecting maps, no pruning shortcuts beyond adjacency.
bool oracle_has_rainbow(const Graph& g, const EdgeColoring& phi, const Tree& t) {
  LeafOrdering ord = leaf_ordering(t, 0);
  int n = g.vertex_count();
  std::vector<int> img(t.k + 1, -1);
  std::vector<bool> used(n, false);
  std::set<int> colors;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i > t.k) return true;
    int pp = ord.parent_pos[i];
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int eid = g.edge_id(img[pp], v);
      if (eid < 0) continue;
      int c = phi.color[eid];
      if (c < 0 || colors.count(c)) continue;
      img[i] = v;
      used[v] = true;
      colors.insert(c);
      if (self(self, i + 1)) return true;
      colors.erase(c);
      used[v] = false;
      img[i] = -1;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    img[0] = s;
    used[s] = true;
    if (rec(rec, 1)) return true;
    used[s] = false;
  }
  return false;
}

}  // namespace

TEST_CASE("rainbow search agrees with the oracle") {
  Graph q3 = Graph::hypercube(3);
  EdgeColoring coord = coordinate_coloring(q3);
  for (int k = 1; k <= 4; ++k) {
    for (const Tree& t : enumerate_trees(k)) {
      RainbowResult r = find_rainbow(q3, coord, t);
      REQUIRE(r.status != SearchStatus::budget_exceeded);
      CHECK((r.status == SearchStatus::found) == oracle_has_rainbow(q3, coord, t));
    }
  }
  // Random colorings on a couple of hosts.
  Graph k5 = Graph::complete_graph(5);
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    EdgeColoring phi = random_proper_coloring(k5, seed);
    for (const Tree& t : enumerate_trees(3)) {
      RainbowResult r = find_rainbow(k5, phi, t);
      REQUIRE(r.status != SearchStatus::budget_exceeded);
      CHECK((r.status == SearchStatus::found) == oracle_has_rainbow(k5, phi, t));
    }
  }
}

TEST_CASE("coordinate coloring of the 3-cube has no rainbow 4-edge path") {
  Graph q3 = Graph::hypercube(3);
  EdgeColoring coord = coordinate_coloring(q3);
  Tree p4 = tree_path(4);
  // Palette shortcut fires (3 colors < 4 edges)...
  RainbowResult quick = find_rainbow(q3, coord, p4);
  CHECK(quick.status == SearchStatus::absent);
  CHECK(quick.nodes == 0);
  // ...and the full search agrees when the shortcut is disabled.
  RainbowOptions opt;
  opt.palette_shortcut = false;
  RainbowResult full = find_rainbow(q3, coord, p4, opt);
  CHECK(full.status == SearchStatus::absent);
  CHECK(full.nodes > 0);
  // The 3-edge path is present.
  CHECK(find_rainbow(q3, coord, tree_path(3)).status == SearchStatus::found);
}

TEST_CASE("4-cube coordinate coloring contains a rainbow 4-edge path") {
  Graph q4 = Graph::hypercube(4);
  EdgeColoring coord = coordinate_coloring(q4);
  Tree p4 = tree_path(4);
  RainbowResult r = find_rainbow(q4, coord, p4);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(is_rainbow_embedding(q4, coord, p4, r.emb));
  // One explicit witness: 0-1-3-7-15 uses coordinates 0,1,2,3.
  Embedding w{{0, 1, 3, 7, 15}};
  CHECK(is_rainbow_embedding(q4, coord, p4, w));
}

TEST_CASE("xor coloring of small complete graphs blocks rainbow spanning paths") {
  for (int p = 2; p <= 3; ++p) {
    auto [kn, phi] = xor_coloring(p);
    Tree span = tree_path((1 << p) - 1);
    RainbowOptions opt;
    opt.palette_shortcut = false;
    RainbowResult r = find_rainbow(kn, phi, span, opt);
    CHECK(r.status == SearchStatus::absent);
    // Shorter paths are fine.
    CHECK(find_rainbow(kn, phi, tree_path((1 << p) - 2), opt).status == SearchStatus::found);
  }
}

TEST_CASE("search budget is honored") {
  Graph q4 = Graph::hypercube(4);
  EdgeColoring coord = coordinate_coloring(q4);
  RainbowOptions opt;
  opt.budget_nodes = 3;
  RainbowResult r = find_rainbow(q4, coord, tree_path(4), opt);
  CHECK(r.status == SearchStatus::budget_exceeded);
  CHECK(r.emb.image.empty());
}

TEST_CASE("edge-mask restriction") {
  Graph q2 = Graph::hypercube(2);
  EdgeColoring coord = coordinate_coloring(q2);
  // Keep only the two coordinate-0 edges: no 2-edge path at all.
  Bitset mask(q2.edge_count());
  for (int e = 0; e < q2.edge_count(); ++e)
    if (coord.color[e] == 0) mask.set(e);
  RainbowOptions opt;
  opt.edge_mask = &mask;
  CHECK(find_rainbow(q2, coord, tree_path(1), opt).status == SearchStatus::found);
  CHECK(find_rainbow(q2, coord, tree_path(2), opt).status == SearchStatus::absent);
}

TEST_CASE("plain containment") {
  Graph q3 = Graph::hypercube(3);
  Tree fork = make_tree({-1, 0, 0, 0, 3});
  CHECK(contains_tree(q3, fork));
  CHECK(!contains_tree(q3, tree_star(4)));  // max degree 3
  Graph c4 = Graph::hypercube(2);
  CHECK(!contains_tree(c4, fork));
  CHECK(contains_tree(c4, tree_path(3)));
  CHECK(!contains_tree(c4, tree_path(4)));  // only 4 vertices
}

TEST_CASE("coordinate embedding in the full cube") {
  Graph q3 = Graph::hypercube(3);
  EdgeColoring coord = coordinate_coloring(q3);
  Tree p3 = tree_path(3);
  FamilyPlan plan = family_plan(p3, Family::path);
  SubgraphView whole(q3);
  Embedding emb = coordinate_embed(whole, coord, p3, plan, 0);
  CHECK(is_rainbow_embedding(q3, coord, p3, emb));
  CHECK(emb.image == std::vector<int>{0, 1, 3, 7});
}

TEST_CASE("coordinate embedding under random colorings on matching unions") {
  // Host: union of k coordinate matchings of Q6 -> min degree exactly k.
  Graph q6 = Graph::hypercube(6);
  std::vector<Bitset> match = coordinate_matchings(q6);
  std::vector<std::pair<Tree, Family>> cases;
  cases.push_back({tree_path(4), Family::path});
  cases.push_back({tree_star(4), Family::many_leaves});
  cases.push_back({tree_spider({2, 2}), Family::even_spider});
  cases.push_back({tree_spider3(1), Family::path});
  for (auto& [t, fam] : cases) {
    FamilyPlan plan = family_plan(t, fam);
    Bitset em(q6.edge_count());
    for (int c = 0; c < t.k; ++c) em |= match[c];
    SubgraphView host(q6, em);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      EdgeColoring phi = random_proper_coloring(q6, seed);
      // Restrict colors to the mask (outside edges stay -1).
      EdgeColoring masked;
      masked.palette = phi.palette;
      masked.color.assign(q6.edge_count(), -1);
      for (int e = 0; e < q6.edge_count(); ++e)
        if (em.test(e)) masked.color[e] = phi.color[e];
      Embedding emb = coordinate_embed(host, masked, t, plan, 0);
      CHECK(is_rainbow_embedding(q6, masked, t, emb, &em));
    }
  }
}

TEST_CASE("coordinate embedding preconditions") {
  Graph q3 = Graph::hypercube(3);
  EdgeColoring coord = coordinate_coloring(q3);
  Tree p4 = tree_path(4);
  FamilyPlan plan = family_plan(p4, Family::path);
  SubgraphView whole(q3);
  // Tree larger than the cube degree.
  CHECK_THROWS_AS(coordinate_embed(whole, coord, p4, plan, 0), Error);
  // Non-cube host.
  Graph k8 = Graph::complete_graph(8);
  EdgeColoring phi = random_proper_coloring(k8, 1);
  SubgraphView kv(k8);
  FamilyPlan plan3 = family_plan(tree_path(3), Family::path);
  CHECK_THROWS_AS(coordinate_embed(kv, phi, tree_path(3), plan3, 0), Error);
}

TEST_CASE("greedy embedding under doubled degree") {
  Tree cases[] = {tree_path(4), tree_star(4), tree_spider({2, 1, 1})};
  Graph k9 = Graph::complete_graph(9);  // min degree 8 = 2k
  SubgraphView host(k9);
  for (const Tree& t : cases) {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      EdgeColoring phi = random_proper_coloring(k9, seed);
      Embedding emb = greedy_embed_min_degree(host, phi, t, 0);
      CHECK(is_rainbow_embedding(k9, phi, t, emb));
    }
  }
  // Pinned start edge.
  EdgeColoring phi = random_proper_coloring(k9, 3);
  Embedding emb = greedy_embed_min_degree(host, phi, tree_path(4), 2, k9.edge_id(2, 5));
  CHECK(emb.image[0] == 2);
  CHECK(emb.image[1] == 5);
  CHECK(is_rainbow_embedding(k9, phi, tree_path(4), emb));
  // Degree too small.
  Graph q3 = Graph::hypercube(3);
  SubgraphView qv(q3);
  EdgeColoring c3 = coordinate_coloring(q3);
  CHECK_THROWS_AS(greedy_embed_min_degree(qv, c3, tree_path(4), 0), Error);
}

TEST_CASE("embedding with a guarded root neighborhood") {
  // Q7 is K_{2,3}-free with min degree 7 > 2k + r - 3 for k = 3, r = 3.
  Graph q7 = Graph::hypercube(7);
  SubgraphView host(q7);
  for (const Tree& t : {tree_path(3), tree_star(3), tree_path(2)}) {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      EdgeColoring phi = random_proper_coloring(q7, seed);
      Embedding emb = k2r_embed(host, phi, t, 0, 3, 0);
      CHECK(is_rainbow_embedding(q7, phi, t, emb));
      // Non-children of the tree root stay out of the root's host neighborhood.
      for (int v = 1; v <= t.k; ++v)
        CHECK((q7.edge_id(emb.image[0], emb.image[v]) >= 0) == (t.parent[v] == 0));
    }
  }
  CHECK_THROWS_AS(k2r_embed(host, coordinate_coloring(q7), tree_path(3), 0, 1, 0), Error);
}

TEST_CASE("embedding trees dominated by leaves at one vertex") {
  // Star with a 2-edge tail: 7 of the 9 edges are leaves at the center.
  Tree base = tree_star(7);
  Tree t = tree_pendant(base, 2);
  TreeStats s = tree_stats(t);
  REQUIRE(s.dominant_leaf_family);
  Graph q9 = Graph::hypercube(9);
  SubgraphView host(q9);
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    EdgeColoring phi = random_proper_coloring(q9, seed);
    Embedding emb = embed_many_leaves(host, phi, t, 3);
    CHECK(is_rainbow_embedding(q9, phi, t, emb));
  }
  // Pure stars work too.
  Tree st = tree_star(9);
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    EdgeColoring phi = random_proper_coloring(q9, seed);
    Embedding emb = embed_many_leaves(host, phi, st, 3);
    CHECK(is_rainbow_embedding(q9, phi, st, emb));
  }
}

TEST_CASE("rainbow 4-edge path witness from an anchored cherry") {
  // Cubes satisfy both host conditions (no triangles, common neighborhoods
  // of size at most 2) and have enough degree from dimension 4 up.
  for (int dim = 4; dim <= 5; ++dim) {
    Graph q = Graph::hypercube(dim);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      EdgeColoring phi = random_proper_coloring(q, seed);
      auto w = rainbow_p4_witness(q, phi, 1, 0, 2);
      Embedding emb{{w[0], w[1], w[2], w[3], w[4]}};
      CHECK(is_rainbow_embedding(q, phi, tree_path(4), emb));
    }
  }
  // Preconditions: no triangles, no 3 common neighbors.
  Graph k5 = Graph::complete_graph(5);
  EdgeColoring pk5 = random_proper_coloring(k5, 1);
  CHECK_THROWS_AS(rainbow_p4_witness(k5, pk5, 0, 1, 2), Error);
  std::vector<std::pair<int, int>> k44;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) k44.push_back({a, 4 + b});
  Graph h = Graph::from_edges(8, k44);
  EdgeColoring ph = random_proper_coloring(h, 1);
  CHECK_THROWS_AS(rainbow_p4_witness(h, ph, 0, 4, 1), Error);
}

TEST_CASE("xor-labeled complete bipartite coloring has no rainbow 4-edge path") {
  // K_{4,4} with parts labeled by 2-bit words and color(x, y) = x xor y: any
  // 4-edge path would need all four colors, whose xor is 0, yet the colors
  // along a path telescope to the xor of its endpoint labels, which is not 0
  // for distinct same-side endpoints. This is why the witness lemma needs
  // hosts without 3 common neighbors.
  std::vector<std::pair<int, int>> es;
  EdgeColoring phi;
  phi.palette = 4;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      es.push_back({a, 4 + b});
      phi.color.push_back(a ^ b);
    }
  Graph h = Graph::from_edges(8, es);
  // from_edges may reorder edge ids; rebuild colors by lookup.
  EdgeColoring fixed;
  fixed.palette = 4;
  fixed.color.assign(h.edge_count(), -1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) fixed.color[h.edge_id(a, 4 + b)] = a ^ b;
  RainbowOptions opt;
  opt.palette_shortcut = false;
  CHECK(find_rainbow(h, fixed, tree_path(4), opt).status == SearchStatus::absent);
  CHECK(find_rainbow(h, fixed, tree_path(3), opt).status == SearchStatus::found);
}

TEST_CASE("structure certificates for hosts without the 3-edge path pattern") {
  // A 4-cycle: fork-free, max degree 2, edges == vertices.
  P3Structure c4 = certify_p3_structure(Graph::hypercube(2));
  CHECK(c4.fork_free);
  CHECK(c4.component_shape_ok);
  CHECK(c4.edge_bound_ok);
  CHECK(c4.ok());
  // A star plus an isolated path.
  Graph mix = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {5, 6}});
  P3Structure ms = certify_p3_structure(mix);
  CHECK(ms.ok());
  // The fork itself fails.
  Graph fork_g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  P3Structure f = certify_p3_structure(fork_g);
  CHECK(!f.fork_free);
  CHECK(!f.ok());
}

TEST_CASE("embedding validity checks reject bad images") {
  Graph q3 = Graph::hypercube(3);
  EdgeColoring coord = coordinate_coloring(q3);
  Tree p2 = tree_path(2);
  CHECK(is_rainbow_embedding(q3, coord, p2, Embedding{{0, 1, 3}}));
  CHECK(!is_rainbow_embedding(q3, coord, p2, Embedding{{0, 1, 1}}));   // not injective
  CHECK(!is_rainbow_embedding(q3, coord, p2, Embedding{{0, 1, 6}}));   // non-edge
  CHECK(!is_rainbow_embedding(q3, coord, p2, Embedding{{0, 1}}));      // wrong size
  // Repeated colors: a monochromatic coloring kills every cherry.
  EdgeColoring mono;
  mono.palette = 1;
  mono.color.assign(q3.edge_count(), 0);
  CHECK(!is_rainbow_embedding(q3, mono, p2, Embedding{{0, 1, 3}}));
  CHECK(is_rainbow_embedding(q3, mono, tree_path(1), Embedding{{0, 1}}));
}
