#include "rbx/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rbx {

namespace {

std::vector<std::vector<int>> build_adj(int k, const std::vector<int>& parent) {
  std::vector<std::vector<int>> adj(k + 1);
  for (int i = 1; i <= k; ++i) {
    adj[i].push_back(parent[i]);
    adj[parent[i]].push_back(i);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

}  // namespace

Tree make_tree(const std::vector<int>& parents) {
  if (parents.empty() || parents[0] != -1)
    fail_precondition("tree: parent[0] must be -1");
  int k = static_cast<int>(parents.size()) - 1;
  for (int i = 1; i <= k; ++i) {
    if (parents[i] < 0 || parents[i] > k || parents[i] == i)
      fail_precondition("tree: parent out of range at vertex " + std::to_string(i));
  }
  // k edges on k+1 vertices: connected to the root <=> acyclic.
  for (int i = 1; i <= k; ++i) {
    int v = i, steps = 0;
    while (v != 0) {
      v = parents[v];
      if (++steps > k) fail_precondition("tree: parent chain from " + std::to_string(i) + " never reaches root");
    }
  }
  Tree t;
  t.k = k;
  t.parent = parents;
  t.adj = build_adj(k, parents);
  return t;
}

Tree tree_path(int k) {
  if (k < 1) fail_precondition("tree_path: k >= 1 required");
  std::vector<int> p(k + 1);
  p[0] = -1;
  for (int i = 1; i <= k; ++i) p[i] = i - 1;
  return make_tree(p);
}

Tree tree_star(int k) {
  if (k < 1) fail_precondition("tree_star: k >= 1 required");
  std::vector<int> p(k + 1, 0);
  p[0] = -1;
  return make_tree(p);
}

Tree tree_spider(const std::vector<int>& legs) {
  if (legs.empty()) fail_precondition("tree_spider: at least one leg");
  for (int l : legs)
    if (l < 1) fail_precondition("tree_spider: leg lengths must be >= 1");
  int k = std::accumulate(legs.begin(), legs.end(), 0);
  std::vector<int> p(k + 1);
  p[0] = -1;
  int next = 1;
  for (int l : legs) {
    for (int j = 0; j < l; ++j) {
      p[next] = (j == 0) ? 0 : next - 1;
      ++next;
    }
  }
  return make_tree(p);
}

Tree tree_spider3(int t) {
  if (t < 1) fail_precondition("tree_spider3: t >= 1 required");
  return tree_spider(std::vector<int>(t, 3));
}

Tree tree_pendant(const Tree& base, int m) {
  if (m < 1) fail_precondition("tree_pendant: m >= 1 required");
  std::vector<int> p = base.parent;
  int kb = base.k;
  for (int j = 1; j <= m; ++j) p.push_back(j == 1 ? 0 : kb + j - 1);
  return make_tree(p);
}

LeafOrdering leaf_ordering(const Tree& t, int root) {
  if (root < 0 || root > t.k) fail_precondition("leaf_ordering: root out of range");
  LeafOrdering ord;
  ord.order.reserve(t.k + 1);
  ord.parent_pos.reserve(t.k + 1);
  std::vector<int> pos(t.k + 1, -1);
  ord.order.push_back(root);
  ord.parent_pos.push_back(-1);
  pos[root] = 0;
  for (int i = 0; i < static_cast<int>(ord.order.size()); ++i) {
    int v = ord.order[i];
    for (int w : t.adj[v]) {  // adj rows sorted: children ascending
      if (pos[w] >= 0) continue;
      pos[w] = static_cast<int>(ord.order.size());
      ord.order.push_back(w);
      ord.parent_pos.push_back(i);
    }
  }
  return ord;
}

bool is_leaf_ordering(const Tree& t, const LeafOrdering& ord) {
  int n = t.k + 1;
  if (static_cast<int>(ord.order.size()) != n) return false;
  if (static_cast<int>(ord.parent_pos.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ord.order[i];
    if (v < 0 || v >= n || pos[v] >= 0) return false;
    pos[v] = i;
  }
  if (ord.parent_pos[0] != -1) return false;
  for (int i = 1; i < n; ++i) {
    int earlier = 0;
    int claimed = ord.parent_pos[i];
    if (claimed < 0 || claimed >= i) return false;
    for (int w : t.adj[ord.order[i]])
      if (pos[w] < i) ++earlier;
    if (earlier != 1) return false;
    bool adjacent = std::binary_search(t.adj[ord.order[i]].begin(), t.adj[ord.order[i]].end(),
                                       ord.order[claimed]);
    if (!adjacent) return false;
  }
  return true;
}

std::vector<int> ordering_positions(const LeafOrdering& ord) {
  std::vector<int> pos(ord.order.size());
  for (int i = 0; i < static_cast<int>(ord.order.size()); ++i) pos[ord.order[i]] = i;
  return pos;
}

TreeStats tree_stats(const Tree& t) {
  TreeStats s;
  int k = t.k;
  for (int v = 0; v <= k; ++v)
    if (t.degree(v) == 1) ++s.leaf_count;

  for (int v = 0; v <= k; ++v) {
    if (t.degree(v) != 1) continue;
    int prev = v, cur = t.adj[v][0], len = 1;
    while (t.degree(cur) == 2) {
      int next = (t.adj[cur][0] == prev) ? t.adj[cur][1] : t.adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    s.max_pendant_path = std::max(s.max_pendant_path, len);
  }

  std::vector<int> high;
  for (int v = 0; v <= k; ++v)
    if (t.degree(v) >= 3) high.push_back(v);
  s.is_path = high.empty();

  auto walk_leg = [&](int root, int first) {
    std::vector<int> leg{first};
    int prev = root, cur = first;
    while (t.degree(cur) == 2) {
      int next = (t.adj[cur][0] == prev) ? t.adj[cur][1] : t.adj[cur][0];
      prev = cur;
      cur = next;
      leg.push_back(cur);
    }
    return leg;
  };

  if (high.size() == 1) {
    SpiderProfile sp;
    sp.root = high[0];
    for (int w : t.adj[sp.root]) sp.legs.push_back(walk_leg(sp.root, w));
    bool all_even = true, all_three = true;
    for (const auto& leg : sp.legs) {
      if (leg.size() % 2 != 0) all_even = false;
      if (leg.size() != 3) all_three = false;
    }
    s.even_spider_family = all_even;
    s.three_spider_family = all_three;
    s.spider = std::move(sp);
  } else if (high.empty()) {
    // Path: profile rooted at the midpoint; tags allow any rooting.
    int start = -1;
    for (int v = 0; v <= k && start < 0; ++v)
      if (t.degree(v) == 1) start = v;
    std::vector<int> seq{start};
    int prev = -1, cur = start;
    while (static_cast<int>(seq.size()) <= k) {
      int next = -1;
      for (int w : t.adj[cur])
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      seq.push_back(cur);
    }
    SpiderProfile sp;
    int mid = k / 2;
    sp.root = seq[mid];
    if (mid > 0) {
      std::vector<int> left(seq.rend() - mid, seq.rend());  // seq[mid-1] .. seq[0]
      sp.legs.push_back(std::move(left));
    }
    std::vector<int> right(seq.begin() + mid + 1, seq.end());
    sp.legs.push_back(std::move(right));
    s.even_spider_family = (k % 2 == 0);
    s.three_spider_family = (k == 3 || k == 6);
    s.spider = std::move(sp);
  }

  for (int v = 0; v <= k; ++v) {
    int c = 0;
    for (int w : t.adj[v])
      if (t.degree(w) == 1) ++c;
    if (c > s.top_leaf_count) {
      s.top_leaf_count = c;
      s.top_leaf_vertex = v;
    }
  }

  s.pendant_family = 4 * s.max_pendant_path >= 3 * k - 1;
  s.many_leaves_family = 2 * s.leaf_count >= k - 1;
  s.dominant_leaf_family = 4 * s.top_leaf_count > 3 * k;
  return s;
}

namespace {

// Concatenation-minimal comparator on level sequences: a before b iff a++b is
// lexicographically smaller than b++a. Sorting children with it yields the
// minimal code over all child orders.
bool cat_less(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = a.size() + b.size();
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : b[i - a.size()];
    int y = i < b.size() ? b[i] : a[i - b.size()];
    if (x != y) return x < y;
  }
  return false;
}

std::vector<int> rooted_code(const Tree& t, int v, int par) {
  std::vector<std::vector<int>> kids;
  for (int w : t.adj[v])
    if (w != par) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end(), cat_less);
  std::vector<int> code{0};
  for (const auto& kc : kids)
    for (int d : kc) code.push_back(d + 1);
  return code;
}

std::vector<int> centroids(const Tree& t) {
  int n = t.k + 1;
  std::vector<int> order, par(n, -1), sz(n, 1);
  order.reserve(n);
  order.push_back(0);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    for (int w : t.adj[v])
      if (w != par[v]) {
        par[w] = v;
        order.push_back(w);
      }
  }
  for (int i = n - 1; i > 0; --i) sz[par[order[i]]] += sz[order[i]];
  int best = n + 1;
  std::vector<int> cs;
  for (int v = 0; v < n; ++v) {
    int mx = n - sz[v];
    for (int w : t.adj[v])
      if (w != par[v]) mx = std::max(mx, sz[w]);
    if (mx < best) {
      best = mx;
      cs.assign(1, v);
    } else if (mx == best) {
      cs.push_back(v);
    }
  }
  return cs;
}

// Parent array (preorder labels) from a level sequence.
std::vector<int> parents_from_code(const std::vector<int>& code) {
  std::vector<int> parents(code.size());
  std::vector<int> last_at_depth(code.size() + 1, -1);
  parents[0] = -1;
  last_at_depth[0] = 0;
  for (int i = 1; i < static_cast<int>(code.size()); ++i) {
    parents[i] = last_at_depth[code[i] - 1];
    last_at_depth[code[i]] = i;
  }
  return parents;
}

}  // namespace

std::vector<int> canonical_code(const Tree& t) {
  std::vector<int> best;
  for (int c : centroids(t)) {
    auto code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Tree> enumerate_trees(int k) {
  if (k < 1 || k > 10) fail_precondition("enumerate_trees: 1 <= k <= 10 required");
  int n = k + 1;
  // catalog[s]: canonical level sequences of all rooted trees with s vertices.
  std::vector<std::vector<std::vector<int>>> catalog(n + 1);
  // Flat view (size, code) in a fixed order so child multisets can be chosen
  // with non-increasing flat index: each multiset is assembled exactly once.
  std::vector<std::pair<int, std::vector<int>>> flat;
  catalog[1] = {{0}};
  flat.push_back({1, {0}});
  for (int s = 2; s <= n; ++s) {
    std::vector<std::vector<int>> chosen;
    auto emit = [&]() {
      auto kids = chosen;
      std::sort(kids.begin(), kids.end(), cat_less);
      std::vector<int> code{0};
      for (const auto& kc : kids)
        for (int d : kc) code.push_back(d + 1);
      catalog[s].push_back(std::move(code));
    };
    auto rec = [&](auto&& self, int remaining, int max_idx) -> void {
      if (remaining == 0) {
        emit();
        return;
      }
      for (int idx = max_idx; idx >= 0; --idx) {
        if (flat[idx].first > remaining) continue;
        chosen.push_back(flat[idx].second);
        self(self, remaining - flat[idx].first, idx);
        chosen.pop_back();
      }
    };
    rec(rec, s - 1, static_cast<int>(flat.size()) - 1);
    for (const auto& code : catalog[s]) flat.push_back({s, code});
  }

  std::vector<Tree> out;
  // Unicentroidal: the rooted form at the unique centroid has every child
  // subtree of size <= (n-1)/2.
  for (const auto& code : catalog[n]) {
    int worst = 0;
    int i = 1;
    while (i < n) {
      int j = i + 1;
      while (j < n && code[j] > 1) ++j;
      worst = std::max(worst, j - i);
      i = j;
    }
    if (worst <= (n - 1) / 2) out.push_back(make_tree(parents_from_code(code)));
  }
  // Bicentroidal: n even, unordered pair of half-size rooted trees joined by
  // the central edge.
  if (n % 2 == 0) {
    const auto& half = catalog[n / 2];
    for (size_t a = 0; a < half.size(); ++a)
      for (size_t b = a; b < half.size(); ++b) {
        std::vector<int> code = half[a];
        for (int d : half[b]) code.push_back(d + 1);
        out.push_back(make_tree(parents_from_code(code)));
      }
  }
  std::sort(out.begin(), out.end(), [](const Tree& x, const Tree& y) {
    return canonical_code(x) < canonical_code(y);
  });
  return out;
}

}  // namespace rbx
