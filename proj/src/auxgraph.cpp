#include "rbx/auxgraph.hpp"

#include <algorithm>
#include <set>

namespace rbx {

namespace {

bool kcolorable(int n, const std::vector<uint32_t>& rows, const std::vector<int>& order,
                std::vector<int>& col, int idx, int c, int used) {
  if (idx == n) return true;
  int v = order[idx];
  uint32_t bad = 0;
  for (int j = 0; j < idx; ++j) {
    int w = order[j];
    if (rows[v] >> w & 1) bad |= 1u << col[w];
  }
  // New colors are interchangeable: allow at most one fresh color.
  int cap = std::min(c - 1, used);
  for (int color = 0; color <= cap; ++color) {
    if (bad >> color & 1) continue;
    col[v] = color;
    if (kcolorable(n, rows, order, col, idx + 1, c, std::max(used, color + 1))) return true;
  }
  return false;
}

}  // namespace

int chromatic_number_small(int n, const std::vector<uint32_t>& rows) {
  if (n < 0 || n > 20) fail_precondition("chromatic_number_small: 0 <= n <= 20 required");
  if (n == 0) return 0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = __builtin_popcount(rows[a]), db = __builtin_popcount(rows[b]);
    return da != db ? da > db : a < b;
  });
  // Greedy clique from each start vertex: lower bound.
  int lb = 1;
  for (int s = 0; s < n; ++s) {
    uint32_t cand = rows[order[s]];
    int size = 1;
    for (int j = 0; j < n; ++j) {
      int v = order[j];
      if (cand >> v & 1) {
        ++size;
        cand &= rows[v];
      }
    }
    lb = std::max(lb, size);
  }
  // Greedy coloring: upper bound.
  std::vector<int> col(n, -1);
  int ub = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    uint32_t bad = 0;
    for (int j = 0; j < i; ++j)
      if (rows[v] >> order[j] & 1) bad |= 1u << col[order[j]];
    int color = 0;
    while (bad >> color & 1) ++color;
    col[v] = color;
    ub = std::max(ub, color + 1);
  }
  for (int c = lb; c < ub; ++c) {
    std::fill(col.begin(), col.end(), -1);
    if (kcolorable(n, rows, order, col, 0, c, 0)) return c;
  }
  return ub;
}

AuxGraph build_aux_graph(const Tree& t, const LeafOrdering& ord,
                         const std::vector<std::pair<int, int>>& seed_pairs) {
  int k = t.k;
  if (k < 1 || k > 63) fail_precondition("build_aux_graph: 1 <= k <= 63 required");
  if (!is_leaf_ordering(t, ord)) fail_precondition("build_aux_graph: not a leaf ordering");
  AuxGraph aux;
  aux.k = k;
  aux.seed.assign(k + 1, 0);
  aux.full.assign(k + 1, 0);
  for (auto [i, j] : seed_pairs) {
    if (i < 1 || i > k || j < 1 || j > k || i == j)
      fail_precondition("build_aux_graph: seed pair out of range");
    aux.seed[i] |= uint64_t(1) << j;
    aux.seed[j] |= uint64_t(1) << i;
  }
  for (int i = 1; i <= k; ++i) aux.full[i] = aux.seed[i];
  for (int i = 1; i <= k; ++i) {
    auto [a, b] = ord.edge_at(i);
    for (int j = i + 1; j <= k; ++j) {
      auto [c, d] = ord.edge_at(j);
      if (a == c || a == d || b == c || b == d) {
        aux.full[i] |= uint64_t(1) << j;
        aux.full[j] |= uint64_t(1) << i;
      }
    }
  }
  return aux;
}

int edge_position(const LeafOrdering& ord, int u, int v) {
  auto pos = ordering_positions(ord);
  if (u < 0 || v < 0 || u >= ord.positions() || v >= ord.positions())
    fail_precondition("edge_position: vertex out of range");
  int i = std::max(pos[u], pos[v]);
  int lo = std::min(pos[u], pos[v]);
  if (i == lo || ord.parent_pos[i] != lo)
    fail_precondition("edge_position: not an ordering edge");
  return i;
}

std::string HypothesisViolation::describe() const {
  std::string s = kind == Kind::degree ? "degree condition at position " : "chromatic condition on positions ";
  for (size_t i = 0; i < positions.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(positions[i]);
  }
  s += ": required " + std::to_string(required) + ", got " + std::to_string(got);
  return s;
}

std::optional<HypothesisViolation> check_coordinate_hypotheses(const Tree& t,
                                                               const LeafOrdering& ord,
                                                               const AuxGraph& aux) {
  int k = t.k;
  for (int j = 1; j <= k; ++j) {
    int got = aux.seed_earlier(j);
    if (got > k - j)
      return HypothesisViolation{HypothesisViolation::Kind::degree, {j}, k - j, got};
  }

  std::vector<int> depth(k + 1, -1);
  depth[0] = 0;
  for (int v = 1; v <= k; ++v) {
    if (depth[v] >= 0) continue;
    std::vector<int> chain;
    int x = v;
    while (depth[x] < 0) {
      chain.push_back(x);
      x = t.parent[x];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth[*it] = depth[x] + 1;
      x = *it;
    }
  }

  for (int a = 0; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      std::vector<std::pair<int, int>> path_edges;
      int x = a, y = b;
      while (depth[x] > depth[y]) {
        path_edges.push_back({x, t.parent[x]});
        x = t.parent[x];
      }
      while (depth[y] > depth[x]) {
        path_edges.push_back({y, t.parent[y]});
        y = t.parent[y];
      }
      while (x != y) {
        path_edges.push_back({x, t.parent[x]});
        path_edges.push_back({y, t.parent[y]});
        x = t.parent[x];
        y = t.parent[y];
      }
      int len = static_cast<int>(path_edges.size());
      if (len < 2 || len % 2 != 0) continue;
      std::vector<int> s;
      s.reserve(path_edges.size());
      for (auto [u, w] : path_edges) s.push_back(edge_position(ord, u, w));
      std::sort(s.begin(), s.end());
      int m = len;
      std::vector<uint32_t> rows(m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (aux.full_link(s[i], s[j])) {
            rows[i] |= 1u << j;
            rows[j] |= 1u << i;
          }
      int need = len / 2 + 1;
      int got = chromatic_number_small(m, rows);
      if (got < need)
        return HypothesisViolation{HypothesisViolation::Kind::chromatic, s, need, got};
    }
  }
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::pendant_path: return "pendant_path";
    case Family::many_leaves: return "many_leaves";
    case Family::even_spider: return "even_spider";
    case Family::three_spider: return "three_spider";
  }
  return "?";
}

namespace {

LeafOrdering ordering_from_sequence(const Tree& t, const std::vector<int>& order) {
  LeafOrdering ord;
  ord.order = order;
  ord.parent_pos.assign(order.size(), -1);
  std::vector<int> pos(t.k + 1, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  for (int i = 1; i < static_cast<int>(order.size()); ++i) {
    int chosen = -1;
    for (int w : t.adj[order[i]])
      if (pos[w] >= 0 && pos[w] < i) {
        if (chosen >= 0) fail_invariant("ordering_from_sequence: two earlier neighbors");
        chosen = pos[w];
      }
    if (chosen < 0) fail_invariant("ordering_from_sequence: no earlier neighbor");
    ord.parent_pos[i] = chosen;
  }
  return ord;
}

// Longest path x_0 x_1 ... x_m with every interior degree 2 and x_m a leaf;
// x_0 is the first vertex of degree != 2 walking inward. Ties: smallest leaf.
std::vector<int> max_pendant_walk(const Tree& t) {
  std::vector<int> best;
  for (int v = 0; v <= t.k; ++v) {
    if (t.degree(v) != 1) continue;
    std::vector<int> walk{v};
    int prev = v, cur = t.adj[v][0];
    walk.push_back(cur);
    while (t.degree(cur) == 2) {
      int next = (t.adj[cur][0] == prev) ? t.adj[cur][1] : t.adj[cur][0];
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    if (walk.size() > best.size()) best = walk;  // first hit wins ties: smallest leaf
  }
  std::reverse(best.begin(), best.end());  // now x_0 ... x_m, leaf last
  return best;
}

std::vector<std::pair<int, int>> path_seed_pairs(int k) {
  std::vector<std::pair<int, int>> seeds;
  for (int i = 1; i <= k; ++i)
    for (int j = std::max(2 * i - k - 1, 1); j <= i - 2; ++j) seeds.push_back({j, i});
  return seeds;
}

FamilyPlan plan_path(const Tree& t) {
  int ends[2], ne = 0;
  for (int v = 0; v <= t.k && ne < 2; ++v)
    if (t.degree(v) == 1) ends[ne++] = v;
  std::vector<int> order{std::min(ends[0], ends[1])};
  int prev = -1, cur = order[0];
  while (static_cast<int>(order.size()) <= t.k) {
    int next = -1;
    for (int w : t.adj[cur])
      if (w != prev) next = w;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  LeafOrdering ord = ordering_from_sequence(t, order);
  return {Family::path, ord, build_aux_graph(t, ord, path_seed_pairs(t.k))};
}

FamilyPlan plan_pendant(const Tree& t) {
  int k = t.k;
  std::vector<int> walk = max_pendant_walk(t);  // x_0 .. x_m
  int m = static_cast<int>(walk.size()) - 1;
  int q = (k + 1) / 2;
  if (m < q) fail_invariant("pendant plan: pendant path shorter than q");

  std::vector<char> on_path(k + 1, 0);
  for (int i = 1; i <= m; ++i) on_path[walk[i]] = 1;

  std::vector<int> order{walk[0]};
  for (int i = 1; i <= q; ++i) order.push_back(walk[i]);
  // Rest of the tree from x_0, breadth-first, skipping the pendant path.
  std::vector<int> tprime{walk[0]};
  {
    std::vector<char> seen(k + 1, 0);
    seen[walk[0]] = 1;
    for (size_t h = 0; h < tprime.size(); ++h)
      for (int w : t.adj[tprime[h]])
        if (!seen[w] && !on_path[w]) {
          seen[w] = 1;
          tprime.push_back(w);
          order.push_back(w);
        }
  }
  for (int i = q + 1; i <= m; ++i) order.push_back(walk[i]);
  LeafOrdering ord = ordering_from_sequence(t, order);
  auto pos = ordering_positions(ord);

  std::vector<std::pair<int, int>> seeds;
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j < i; ++j) seeds.push_back({j, i});
  // Off-path edges, in ordering position order q+1 .. q+(k-m).
  int kp = k - m;
  for (int i = 1; i <= kp; ++i) {
    int p = q + i;
    seeds.push_back({1, p});
    auto [a, b] = ord.edge_at(p);
    for (int j = 1; j < i; ++j) {
      auto [c, d] = ord.edge_at(q + j);
      if (a != c && a != d && b != c && b != d) seeds.push_back({q + j, p});
    }
  }
  // Pendant tail.
  auto path_edge_pos = [&](int j) { return j <= q ? j : q + kp + (j - q); };
  for (int s = q + 1; s <= m; ++s) {
    int p = path_edge_pos(s);
    for (int j = std::max(2 * s - m - 1, 1); j <= s - 2; ++j)
      seeds.push_back({path_edge_pos(j), p});
  }
  (void)pos;
  return {Family::pendant_path, ord, build_aux_graph(t, ord, seeds)};
}

FamilyPlan plan_leaves(const Tree& t) {
  int k = t.k;
  std::vector<char> is_leaf(k + 1, 0);
  for (int v = 0; v <= k; ++v)
    if (t.degree(v) == 1) is_leaf[v] = 1;
  std::vector<int> tprime;
  for (int v = 0; v <= k; ++v)
    if (!is_leaf[v]) tprime.push_back(v);
  if (tprime.empty()) tprime.push_back(0);  // single edge: keep vertex 0
  std::vector<char> in_tp(k + 1, 0);
  for (int v : tprime) in_tp[v] = 1;

  // Core ordering: BFS inside the core from its smallest vertex.
  std::vector<int> order{tprime[0]};
  {
    std::vector<char> seen(k + 1, 0);
    seen[tprime[0]] = 1;
    for (size_t h = 0; h < order.size(); ++h)
      for (int w : t.adj[order[h]])
        if (in_tp[w] && !seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  int kp = static_cast<int>(order.size()) - 1;  // core edge count
  std::vector<int> core_pos(k + 1, -1);
  for (int i = 0; i <= kp; ++i) core_pos[order[i]] = i;

  // Leaves ascending by attachment position, ties by label.
  std::vector<int> leaves;
  for (int v = 0; v <= k; ++v)
    if (is_leaf[v] && !in_tp[v]) leaves.push_back(v);
  std::stable_sort(leaves.begin(), leaves.end(), [&](int a, int b) {
    return core_pos[t.adj[a][0]] < core_pos[t.adj[b][0]];
  });
  for (int v : leaves) order.push_back(v);
  LeafOrdering ord = ordering_from_sequence(t, order);
  auto pos = ordering_positions(ord);

  std::vector<std::pair<int, int>> seeds;
  for (int i = 1; i <= kp; ++i)
    for (int j = 1; j < i; ++j) seeds.push_back({j, i});
  // Latest leaf position attached at each core vertex.
  std::vector<int> last_leaf_at(k + 1, -1);
  for (int v : leaves) last_leaf_at[t.adj[v][0]] = pos[v];
  for (int v : leaves) {
    int p = pos[v];
    int a = t.adj[v][0];
    for (int x : t.adj[a]) {
      if (!in_tp[x] || x == a) continue;
      for (int b : t.adj[x]) {
        if (!in_tp[b] || b == a) continue;
        if (last_leaf_at[b] > p) seeds.push_back({edge_position(ord, x, b), p});
      }
    }
  }
  return {Family::many_leaves, ord, build_aux_graph(t, ord, seeds)};
}

// Arms: vertex walks from the root, each of even length, longest first.
FamilyPlan plan_even_spider(const Tree& t, int root, std::vector<std::vector<int>> arms) {
  std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a[0] < b[0];
  });
  int tt = static_cast<int>(arms.size());
  std::vector<int> half(tt), base(tt);
  int bigk = 0;
  for (int s = 0; s < tt; ++s) {
    if (arms[s].size() % 2 != 0) fail_invariant("even spider plan: odd arm");
    half[s] = static_cast<int>(arms[s].size()) / 2;
    base[s] = bigk;
    bigk += half[s];
  }
  std::vector<int> order{root};
  for (int s = 0; s < tt; ++s)
    for (int j = 0; j < half[s]; ++j) order.push_back(arms[s][j]);
  for (int s = 0; s < tt; ++s)
    for (int j = half[s]; j < 2 * half[s]; ++j) order.push_back(arms[s][j]);
  LeafOrdering ord = ordering_from_sequence(t, order);

  // Position of edge i (1-based from the root) of arm s.
  auto arm_edge_pos = [&](int s, int i) {
    return i <= half[s] ? base[s] + i : bigk + base[s] + (i - half[s]);
  };
  std::vector<std::pair<int, int>> seeds;
  for (int i = 1; i <= bigk; ++i)
    for (int j = 1; j < i; ++j) seeds.push_back({j, i});
  for (int s = 0; s < tt; ++s) {
    for (int i = half[s] + 1; i <= 2 * half[s]; ++i) {
      int p = arm_edge_pos(s, i);
      for (int j = std::max(2 * i - 2 * half[s] - 1, 1); j <= i - 2; ++j)
        seeds.push_back({arm_edge_pos(s, j), p});
      for (int r = s + 1; r < tt; ++r)
        for (int j = 1; j <= half[r]; ++j) seeds.push_back({arm_edge_pos(r, j), p});
    }
  }
  return {Family::even_spider, ord, build_aux_graph(t, ord, seeds)};
}

FamilyPlan plan_spider3(const Tree& t, int root, std::vector<std::vector<int>> arms) {
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& a, const auto& b) { return a[0] < b[0]; });
  int tt = static_cast<int>(arms.size());
  int m = (tt + 1) / 2;
  std::vector<int> order{root};
  for (int s = 0; s < tt; ++s) order.push_back(arms[s][0]);
  for (int s = 0; s < tt; ++s) order.push_back(arms[s][1]);
  for (int s = tt - 1; s >= 0; --s) order.push_back(arms[s][2]);
  LeafOrdering ord = ordering_from_sequence(t, order);

  // 1-based arm index s: bottom edge at s, middle at tt+s, top at 3tt-s+1.
  std::vector<std::pair<int, int>> seeds;
  for (int i = 1; i <= tt + m; ++i)
    for (int j = 1; j < i; ++j) seeds.push_back({j, i});
  for (int i = m + 1; i <= tt; ++i) {
    int p = tt + i;
    for (int j = 1; j <= tt; ++j)
      if (j != i) seeds.push_back({j, p});
    for (int j = 1; j <= tt - i + 1; ++j) seeds.push_back({tt + j, p});
  }
  for (int s = m + 1; s <= tt; ++s) {
    int p = 3 * tt - s + 1;
    seeds.push_back({s, p});
    for (int r = std::max(tt - s + 2, 1); r <= s - 1; ++r) seeds.push_back({r, p});
  }
  // The clique already contains pairs among 1..tt+m; drop duplicates.
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return {Family::three_spider, ord, build_aux_graph(t, ord, seeds)};
}

}  // namespace

std::optional<Family> pick_family(const TreeStats& stats) {
  if (stats.is_path) return Family::path;
  if (stats.three_spider_family) return Family::three_spider;
  if (stats.even_spider_family) return Family::even_spider;
  if (stats.pendant_family) return Family::pendant_path;
  if (stats.many_leaves_family) return Family::many_leaves;
  return std::nullopt;
}

std::optional<Family> pick_family(const Tree& t) { return pick_family(tree_stats(t)); }

FamilyPlan family_plan(const Tree& t, Family f) {
  TreeStats stats = tree_stats(t);
  FamilyPlan plan;
  switch (f) {
    case Family::path:
      if (!stats.is_path) fail_precondition("family_plan: tree is not a path");
      plan = plan_path(t);
      break;
    case Family::pendant_path:
      if (!stats.pendant_family) fail_precondition("family_plan: pendant path too short");
      plan = stats.is_path ? plan_path(t) : plan_pendant(t);
      plan.family = Family::pendant_path;
      break;
    case Family::many_leaves:
      if (!stats.many_leaves_family) fail_precondition("family_plan: too few leaves");
      plan = plan_leaves(t);
      break;
    case Family::even_spider: {
      if (!stats.even_spider_family) fail_precondition("family_plan: not an even spider");
      bool profile_even = stats.spider.has_value();
      if (profile_even)
        for (const auto& leg : stats.spider->legs)
          if (leg.size() % 2 != 0) profile_even = false;
      if (profile_even) {
        plan = plan_even_spider(t, stats.spider->root, stats.spider->legs);
      } else {
        // Even path whose midpoint split is odd: root at an endpoint instead,
        // which is exactly the path construction.
        plan = plan_path(t);
        plan.family = Family::even_spider;
      }
      break;
    }
    case Family::three_spider: {
      if (!stats.three_spider_family) fail_precondition("family_plan: not a spider of 3-legs");
      bool profile_three = stats.spider.has_value();
      if (profile_three)
        for (const auto& leg : stats.spider->legs)
          if (leg.size() != 3) profile_three = false;
      if (profile_three) {
        plan = plan_spider3(t, stats.spider->root, stats.spider->legs);
      } else {
        plan = plan_path(t);  // single 3-edge path rooted at its end
        plan.family = Family::three_spider;
      }
      break;
    }
  }
  if (!is_leaf_ordering(t, plan.ord)) fail_invariant("family_plan: broken ordering");
  if (auto v = check_coordinate_hypotheses(t, plan.ord, plan.aux))
    fail_invariant("family_plan(" + std::string(family_name(f)) + "): " + v->describe());
  return plan;
}

}  // namespace rbx
