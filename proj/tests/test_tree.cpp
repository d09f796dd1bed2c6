#include <queue>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rbx/tree.hpp"

using namespace rbx;

namespace {

// --- Independent free-tree oracle -----------------------------------------
// Labeled trees on n vertices enumerated through Prufer sequences, then
// collapsed to isomorphism classes with a string-based centroid canonical
// form. Shares no code with the production enumerator (level sequences,
// multiset assembly).

std::vector<std::vector<int>> prufer_decode_adj(const std::vector<int>& seq, int n) {
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::vector<int>> adj(n);
  auto add = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int x : seq) {
    int u = leaves.top();
    leaves.pop();
    add(u, x);
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  add(a, leaves.top());
  return adj;
}

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int par) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != par) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& ks : kids) s += ks;
  s += ")";
  return s;
}

int component_size(const std::vector<std::vector<int>>& adj, int start, int banned) {
  std::vector<int> stack{start}, seen(adj.size(), 0);
  seen[start] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++cnt;
    for (int w : adj[v])
      if (w != banned && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return cnt;
}

std::string oracle_canonical(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  int best = n + 1;
  std::vector<int> cents;
  for (int v = 0; v < n; ++v) {
    int mx = 0;
    for (int w : adj[v]) mx = std::max(mx, component_size(adj, w, v));
    if (mx < best) {
      best = mx;
      cents.assign(1, v);
    } else if (mx == best) {
      cents.push_back(v);
    }
  }
  std::string bests;
  for (int c : cents) {
    std::string s = ahu(adj, c, -1);
    if (bests.empty() || s < bests) bests = s;
  }
  return bests;
}

std::set<std::string> oracle_tree_classes(int k) {
  int n = k + 1;
  std::set<std::string> out;
  if (n == 2) {
    out.insert(oracle_canonical({{1}, {0}}));
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    out.insert(oracle_canonical(prufer_decode_adj(seq, n)));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

}  // namespace

TEST_CASE("make_tree validation") {
  CHECK_NOTHROW(make_tree({-1, 0, 1}));
  CHECK_THROWS_AS(make_tree({0, 0}), Error);        // root parent must be -1
  CHECK_THROWS_AS(make_tree({-1, 2, 1}), Error);    // cycle 1<->2, unreachable root
  CHECK_THROWS_AS(make_tree({-1, 3}), Error);       // parent out of range
  CHECK_THROWS_AS(make_tree({-1, 1}), Error);       // self parent
  Tree t = make_tree({-1, 0, 0, 2});
  CHECK(t.k == 3);
  CHECK(t.degree(0) == 2);
  CHECK(t.degree(2) == 2);
}

TEST_CASE("families have the right shape") {
  Tree p = tree_path(4);
  CHECK(p.k == 4);
  CHECK(p.degree(0) == 1);
  CHECK(p.degree(4) == 1);
  for (int v = 1; v <= 3; ++v) CHECK(p.degree(v) == 2);

  Tree s = tree_star(5);
  CHECK(s.degree(0) == 5);
  for (int v = 1; v <= 5; ++v) CHECK(s.degree(v) == 1);

  Tree sp = tree_spider({2, 3, 1});
  CHECK(sp.k == 6);
  CHECK(sp.degree(0) == 3);

  Tree sp3 = tree_spider3(4);
  CHECK(sp3.k == 12);
  CHECK(sp3.degree(0) == 4);

  Tree pend = tree_pendant(tree_star(3), 2);
  CHECK(pend.k == 5);
  CHECK(pend.degree(0) == 4);
  CHECK(pend.degree(4) == 2);
  CHECK(pend.degree(5) == 1);
}

TEST_CASE("leaf orderings") {
  Tree t = tree_spider({2, 2});
  for (int root = 0; root <= t.k; ++root) {
    LeafOrdering ord = leaf_ordering(t, root);
    CHECK(is_leaf_ordering(t, ord));
    CHECK(ord.order[0] == root);
    auto pos = ordering_positions(ord);
    CHECK(pos[root] == 0);
    for (int i = 1; i <= t.k; ++i) {
      auto [a, b] = ord.edge_at(i);
      CHECK(pos[a] < pos[b]);
      CHECK(pos[b] == i);
    }
  }
  // BFS from 0 with ascending children on a star: identity order.
  LeafOrdering so = leaf_ordering(tree_star(4), 0);
  CHECK(so.order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(so.parent_pos == std::vector<int>{-1, 0, 0, 0, 0});

  // Swapped orders are rejected.
  LeafOrdering bad = so;
  std::swap(bad.order[0], bad.order[1]);
  CHECK(!is_leaf_ordering(tree_star(4), bad));
}

TEST_CASE("tree stats on known shapes") {
  TreeStats p5 = tree_stats(tree_path(5));
  CHECK(p5.leaf_count == 2);
  CHECK(p5.max_pendant_path == 5);
  CHECK(p5.is_path);
  REQUIRE(p5.spider.has_value());
  CHECK(p5.spider->legs.size() == 2);
  CHECK(p5.pendant_family);
  CHECK(p5.many_leaves_family);  // 2*2 >= 4
  CHECK(!p5.even_spider_family);
  CHECK(!p5.three_spider_family);
  CHECK(!p5.dominant_leaf_family);
  CHECK(p5.top_leaf_vertex == 1);
  CHECK(p5.top_leaf_count == 1);

  TreeStats p4 = tree_stats(tree_path(4));
  CHECK(p4.even_spider_family);  // 4 = 2+2 from the midpoint
  TreeStats p3 = tree_stats(tree_path(3));
  CHECK(p3.three_spider_family);  // single leg of 3 from an endpoint
  TreeStats p6 = tree_stats(tree_path(6));
  CHECK(p6.three_spider_family);  // 3+3 from the midpoint
  CHECK(p6.even_spider_family);

  TreeStats st = tree_stats(tree_star(4));
  CHECK(st.leaf_count == 4);
  CHECK(st.max_pendant_path == 1);
  CHECK(!st.is_path);
  CHECK(!st.pendant_family);
  CHECK(st.many_leaves_family);
  CHECK(st.dominant_leaf_family);  // 4*4 > 12
  CHECK(st.top_leaf_vertex == 0);
  CHECK(st.top_leaf_count == 4);

  TreeStats sp = tree_stats(tree_spider({2, 2, 2}));
  CHECK(sp.even_spider_family);
  CHECK(!sp.three_spider_family);
  CHECK(sp.many_leaves_family);  // 2*3 >= 5
  CHECK(!sp.pendant_family);     // 4*2 < 17
  REQUIRE(sp.spider.has_value());
  CHECK(sp.spider->root == 0);
  CHECK(sp.spider->legs.size() == 3);

  TreeStats sp3 = tree_stats(tree_spider3(3));
  CHECK(sp3.three_spider_family);
  CHECK(!sp3.even_spider_family);

  TreeStats k1 = tree_stats(tree_path(1));
  CHECK(k1.leaf_count == 2);
  CHECK(k1.max_pendant_path == 1);
  CHECK(k1.pendant_family);
  CHECK(k1.many_leaves_family);
  CHECK(k1.dominant_leaf_family);
  CHECK(k1.top_leaf_vertex == 0);

  // Two high-degree vertices: no spider profile.
  Tree h = make_tree({-1, 0, 0, 0, 3, 3, 3});  // two centers joined, 3 leaves each...
  TreeStats hs = tree_stats(h);
  CHECK(!hs.spider.has_value());
  CHECK(!hs.even_spider_family);
  CHECK(!hs.three_spider_family);
}

TEST_CASE("canonical codes are isomorphism invariants") {
  // Same path labeled two ways.
  Tree a = make_tree({-1, 0, 1, 2});
  Tree b = make_tree({-1, 0, 0, 2});  // 1-0-2-3 chain
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(tree_star(3)));
}

TEST_CASE("tree enumeration matches the oracle up to k=7") {
  std::vector<size_t> frozen{1, 1, 2, 3, 6, 11, 23};
  for (int k = 1; k <= 7; ++k) {
    auto classes = oracle_tree_classes(k);
    CHECK(classes.size() == frozen[k - 1]);
    std::vector<Tree> ours = enumerate_trees(k);
    CHECK(ours.size() == classes.size());
    std::set<std::string> got;
    std::set<std::vector<int>> codes;
    for (const Tree& t : ours) {
      CHECK(t.k == k);
      std::vector<std::vector<int>> adj(t.adj.begin(), t.adj.end());
      got.insert(oracle_canonical(adj));
      codes.insert(canonical_code(t));
    }
    CHECK(got == classes);          // exactly one representative per class
    CHECK(codes.size() == ours.size());  // production codes also distinct
  }
}

TEST_CASE("tree enumeration counts for larger k") {
  CHECK(enumerate_trees(8).size() == 47);
  CHECK(enumerate_trees(9).size() == 106);
  CHECK(enumerate_trees(10).size() == 235);
}
