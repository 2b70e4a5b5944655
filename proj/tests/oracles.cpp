#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>

#include "fdel/minors.hpp"
#include "fdel/structure.hpp"

namespace oracle {

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    fn(Graph::from_edges(n, edges));
  }
}

const std::vector<Graph>& graphs_up_to_iso(int n, bool connected_only) {
  static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
  auto key = std::make_pair(n, connected_only);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // bucket by a cheap invariant, then isomorphism-check within buckets
  std::map<std::vector<int>, std::vector<int>> buckets;
  std::vector<Graph> reps;
  for_each_graph(n, [&](const Graph& g) {
    if (connected_only && !fdel::is_connected(g)) return;
    std::vector<int> inv;
    for (int v = 0; v < g.n; ++v) inv.push_back(g.degree(v));
    std::sort(inv.begin(), inv.end());
    int triangles = 0;
    for (auto [u, v] : g.edges)
      for (int w = 0; w < g.n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++triangles;
    inv.push_back(triangles);
    auto& bucket = buckets[inv];
    for (int idx : bucket)
      if (fdel::graph_isomorphic(reps[idx], g)) return;
    bucket.push_back(static_cast<int>(reps.size()));
    reps.push_back(g);
  });
  return cache.emplace(key, std::move(reps)).first->second;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer cycle
    edges.emplace_back(i, i + 5);              // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

namespace {

int nu_rec(const Graph& g, std::vector<char>& used, size_t from) {
  int best = 0;
  for (size_t i = from; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    best = std::max(best, 1 + nu_rec(g, used, i + 1));
    used[u] = used[v] = 0;
  }
  return best;
}

}  // namespace

int nu_exhaustive(const Graph& g) {
  std::vector<char> used(g.n, 0);
  return nu_rec(g, used, 0);
}

int vc_exhaustive(const Graph& g) {
  assert(g.n <= 20);
  int best = g.n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.n); ++mask) {
    bool covers = true;
    for (auto [u, v] : g.edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        covers = false;
        break;
      }
    if (covers) best = std::min(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

VertexSet robust_max_exhaustive(const Graph& g, int alpha) {
  assert(g.n <= 16);
  std::vector<VertexSet> robust;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.n); ++mask) {
    VertexSet s;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (fdel::is_alpha_robust(fdel::induced_subgraph(g, s).graph, alpha))
      robust.push_back(s);
  }
  VertexSet best;  // empty when nothing is robust
  for (const auto& s : robust)
    if (s.size() > best.size()) best = s;
  for (const auto& s : robust)
    assert(fdel::set_intersection(s, best) == s);  // uniqueness of the maximum
  return best;
}

namespace {

bool subgraph_rec(const Graph& g, const Graph& h, std::vector<int>& map,
                  std::vector<char>& used, int next) {
  if (next == h.n) return true;
  for (int cand = 0; cand < g.n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int w : h.adj[next])
      if (w < next && !g.has_edge(map[w], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (subgraph_rec(g, h, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool subgraph_oracle(const Graph& g, const Graph& h) {
  std::vector<int> map(h.n, -1);
  std::vector<char> used(g.n, 0);
  return subgraph_rec(g, h, map, used, 0);
}

bool minor_oracle(const Graph& g, const Graph& h) {
  if (h.n == 0) return true;
  // assign[v] in [0, h.n]: branch set index or h.n for unused
  std::vector<int> assign(g.n, 0);
  while (true) {
    // validate this assignment
    std::vector<VertexSet> sets(h.n);
    for (int v = 0; v < g.n; ++v)
      if (assign[v] < h.n) sets[assign[v]].push_back(v);
    bool ok = true;
    for (int i = 0; i < h.n && ok; ++i) {
      if (sets[i].empty() ||
          !fdel::is_connected(fdel::induced_subgraph(g, sets[i]).graph))
        ok = false;
    }
    for (auto [a, b] : h.edges) {
      if (!ok) break;
      bool touched = false;
      for (int x : sets[a])
        for (int y : sets[b])
          if (g.has_edge(x, y)) touched = true;
      if (!touched) ok = false;
    }
    if (ok) return true;
    // next assignment
    int i = 0;
    while (i < g.n && assign[i] == h.n) assign[i++] = 0;
    if (i == g.n) return false;
    ++assign[i];
  }
}

}  // namespace oracle
