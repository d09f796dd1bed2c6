#include "rbx/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace rbx {

bool is_proper(const Graph& g, const EdgeColoring& phi, const Bitset* mask) {
  if (static_cast<int>(phi.color.size()) != g.edge_count()) return false;
  std::vector<int> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    seen.clear();
    for (const IncEntry& e : g.adj(v)) {
      if (mask && !mask->test(e.edge)) continue;
      int c = phi.color[e.edge];
      if (c < 0) continue;
      seen.push_back(c);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

int palette_used(const Graph& g, const EdgeColoring& phi, const Bitset* mask) {
  std::vector<int> cs;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (mask && !mask->test(id)) continue;
    if (phi.color[id] >= 0) cs.push_back(phi.color[id]);
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return static_cast<int>(cs.size());
}

bool coloring_invariant_ok(const Graph& g, const EdgeColoring& phi) {
  if (static_cast<int>(phi.color.size()) != g.edge_count()) return false;
  std::vector<bool> used(std::max(phi.palette, 0), false);
  for (int c : phi.color) {
    if (c < 0 || c >= phi.palette) return false;
    used[c] = true;
  }
  for (bool b : used)
    if (!b) return false;
  return is_proper(g, phi);
}

EdgeColoring coordinate_coloring(const Graph& g) {
  if (!g.is_cube()) fail_precondition("coordinate coloring needs a hypercube host");
  EdgeColoring phi;
  phi.palette = *g.cube_dim();
  phi.color.resize(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) phi.color[id] = g.edge(id).coord;
  return phi;
}

std::pair<Graph, EdgeColoring> xor_coloring(int p) {
  if (p < 1 || p > 6) fail_precondition("xor coloring defined for 1 <= p <= 6");
  Graph g = Graph::complete_graph(1 << p);
  EdgeColoring phi;
  phi.palette = (1 << p) - 1;
  phi.color.resize(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id)
    phi.color[id] = (g.edge(id).u ^ g.edge(id).v) - 1;
  return {std::move(g), std::move(phi)};
}

namespace {

struct PartitionEnum {
  const Graph& g;
  const std::function<bool(const EdgeColoring&)>& visit;
  std::vector<int> ids;                         // alive edges, ascending
  std::vector<std::vector<int>> class_vertices; // occupancy per class
  EdgeColoring phi;
  std::optional<uint64_t> max_yield;
  EnumStatus status = EnumStatus::completed;
  uint64_t yielded = 0;

  bool conflicts(int cls, int id) const {
    const Edge& e = g.edge(id);
    for (int v : class_vertices[cls])
      if (v == e.u || v == e.v) return true;
    return false;
  }

  // Returns false to unwind the whole recursion.
  bool rec(size_t pos, int used) {
    if (pos == ids.size()) {
      phi.palette = used;
      ++yielded;
      if (!visit(phi)) {
        status = EnumStatus::stopped_by_caller;
        return false;
      }
      if (max_yield && yielded >= *max_yield) {
        status = EnumStatus::budget_exhausted;
        return false;
      }
      return true;
    }
    int id = ids[pos];
    for (int cls = 0; cls <= used; ++cls) {
      if (cls < used && conflicts(cls, id)) continue;
      if (cls == used) class_vertices.emplace_back();
      class_vertices[cls].push_back(g.edge(id).u);
      class_vertices[cls].push_back(g.edge(id).v);
      phi.color[id] = cls;
      bool keep = rec(pos + 1, std::max(used, cls + 1));
      phi.color[id] = -1;
      class_vertices[cls].pop_back();
      class_vertices[cls].pop_back();
      if (cls == used) class_vertices.pop_back();
      if (!keep) return false;
    }
    return true;
  }
};

}  // namespace

EnumResult enumerate_matching_partitions(const Graph& g,
                                         const std::function<bool(const EdgeColoring&)>& visit,
                                         const Bitset* mask, std::optional<uint64_t> max_yield) {
  std::vector<int> ids;
  for (int id = 0; id < g.edge_count(); ++id)
    if (!mask || mask->test(id)) ids.push_back(id);
  if (!max_yield && ids.size() > 16)
    fail_resource("partition enumeration guarded at 16 edges; pass a budget to override");
  if (ids.empty()) {
    // The empty edge set has the single empty partition.
    EdgeColoring phi;
    phi.color.assign(g.edge_count(), -1);
    phi.palette = 0;
    bool keep = visit(phi);
    return {keep ? EnumStatus::completed : EnumStatus::stopped_by_caller, 1};
  }
  PartitionEnum pe{g, visit, std::move(ids), {}, {}, max_yield};
  pe.phi.color.assign(g.edge_count(), -1);
  pe.rec(0, 0);
  return {pe.status, pe.yielded};
}

std::vector<EdgeColoring> all_matching_partitions(const Graph& g, const Bitset* mask) {
  std::vector<EdgeColoring> out;
  enumerate_matching_partitions(
      g,
      [&](const EdgeColoring& phi) {
        out.push_back(phi);
        return true;
      },
      mask);
  return out;
}

EdgeColoring random_proper_coloring(const Graph& g, uint64_t seed, std::optional<int> palette_cap) {
  int max_deg = 0;
  for (int v = 0; v < g.vertex_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
  if (palette_cap && *palette_cap < max_deg + 1)
    fail_precondition("palette cap below max degree + 1");

  std::mt19937_64 rng(seed);
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  // Hand-rolled Fisher-Yates: std::shuffle's draw sequence is not pinned by
  // the standard, and reports must be byte-stable across toolchains.
  for (int i = g.edge_count() - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }

  EdgeColoring phi;
  phi.color.assign(g.edge_count(), -1);
  std::vector<char> taken;
  for (int id : order) {
    const Edge& e = g.edge(id);
    taken.assign(taken.size(), 0);
    for (int end : {e.u, e.v})
      for (const IncEntry& inc : g.adj(end)) {
        int c = phi.color[inc.edge];
        if (c < 0) continue;
        if (c >= static_cast<int>(taken.size())) taken.resize(c + 1, 0);
        taken[c] = 1;
      }
    int c = 0;
    while (c < static_cast<int>(taken.size()) && taken[c]) ++c;
    if (palette_cap && c >= *palette_cap)
      throw Error(ErrorKind::infeasible,
                  "greedy coloring needs color " + std::to_string(c) +
                      " but the palette cap is " + std::to_string(*palette_cap));
    phi.color[id] = c;
    phi.palette = std::max(phi.palette, c + 1);
  }
  return phi;
}

}  // namespace rbx
