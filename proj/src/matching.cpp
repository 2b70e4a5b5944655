#include "fdel/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "fdel/structure.hpp"

namespace fdel {

namespace {

// Standard Edmonds blossom search: one augmenting BFS per exposed vertex,
// contracting blossoms via the base[] map.
struct Blossom {
  const Graph& g;
  std::vector<int> match, par, base;
  std::vector<char> in_queue, in_blossom;

  explicit Blossom(const Graph& g) : g(g), match(g.n, -1) {}

  int lca(int u, int v) {
    std::vector<char> seen(g.n, 0);
    while (true) {
      u = base[u];
      seen[u] = 1;
      if (match[u] == -1) break;
      u = par[match[u]];
    }
    while (true) {
      v = base[v];
      if (seen[v]) return v;
      v = par[match[v]];
    }
  }

  void mark_path(int v, int b, int child, std::queue<int>& q) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      par[v] = child;
      child = match[v];
      if (!in_queue[match[v]]) {
        in_queue[match[v]] = 1;
        q.push(match[v]);
      }
      v = par[match[v]];
    }
  }

  int find_augmenting(int root) {
    par.assign(g.n, -1);
    base.resize(g.n);
    for (int i = 0; i < g.n; ++i) base[i] = i;
    in_queue.assign(g.n, 0);
    std::queue<int> q;
    q.push(root);
    in_queue[root] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v]) {
        if (base[v] == base[w] || match[v] == w) continue;
        if (w == root || (match[w] != -1 && par[match[w]] != -1)) {
          // odd cycle: contract the blossom
          int b = lca(v, w);
          in_blossom.assign(g.n, 0);
          mark_path(v, b, w, q);
          mark_path(w, b, v, q);
          for (int i = 0; i < g.n; ++i)
            if (in_blossom[base[i]]) base[i] = b;
        } else if (par[w] == -1) {
          par[w] = v;
          if (match[w] == -1) return w;
          if (!in_queue[match[w]]) {
            in_queue[match[w]] = 1;
            q.push(match[w]);
          }
        }
      }
    }
    return -1;
  }

  void run() {
    for (int v = 0; v < g.n; ++v) {
      if (match[v] != -1) continue;
      int w = find_augmenting(v);
      while (w != -1) {
        int pw = par[w], next = match[pw];
        match[w] = pw;
        match[pw] = w;
        w = next;
      }
    }
  }
};

}  // namespace

std::vector<std::pair<int, int>> max_matching(const Graph& g) {
  Blossom b(g);
  b.run();
  std::vector<std::pair<int, int>> res;
  for (int v = 0; v < g.n; ++v)
    if (b.match[v] > v) res.emplace_back(v, b.match[v]);
  return res;
}

bool verify_partition(const Graph& g, const TBPartition& p, int m) {
  VertexSet all = set_union(set_union(p.U, p.R), p.S);
  if (static_cast<int>(p.U.size() + p.R.size() + p.S.size()) != g.n ||
      all != full_vertex_set(g))
    throw std::invalid_argument("verify_partition: U, R, S do not partition V");

  auto gr = induced_subgraph(g, p.R).graph;
  int odd_r = 0;
  for (const auto& comp : connected_components(gr)) {
    if (comp.size() % 2 == 0 || comp.size() < 3) return false;
    ++odd_r;
  }
  for (int v : p.S)
    for (int w : g.adj[v])
      if (!set_contains(p.U, w)) return false;  // covers S edgeless too
  int bound = static_cast<int>(p.U.size()) +
              (static_cast<int>(p.R.size()) - odd_r) / 2;
  return bound <= m;
}

std::optional<TBPartition> tutte_berge_partition(const Graph& g, int m, int cap) {
  if (m < 0) throw std::invalid_argument("tutte_berge_partition: m < 0");
  if (g.n > cap)
    throw cap_error("tutte_berge_partition: " + std::to_string(g.n) +
                    " vertices exceeds cap " + std::to_string(cap));
  if (matching_number(g) > m) return std::nullopt;

  // Tutte-Berge witness: first subset (enumeration order) maximizing
  // odd(G-U) - |U|.
  VertexSet all = full_vertex_set(g);
  int best_def = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
    VertexSet u;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) u.push_back(v);
    VertexSet rest = set_difference(all, u);
    auto sub = induced_subgraph(g, rest).graph;
    int odd = 0;
    for (const auto& comp : connected_components(sub))
      if (comp.size() % 2 == 1) ++odd;
    int def = odd - static_cast<int>(u.size());
    if (def > best_def) {
      best_def = def;
      best_mask = mask;
    }
  }

  TBPartition p;
  for (int v = 0; v < g.n; ++v)
    if (best_mask >> v & 1) p.U.push_back(v);

  // even components: move their smallest non-cut vertex into U, leaving an
  // odd connected remainder
  VertexSet rest = set_difference(all, p.U);
  auto sub = induced_subgraph(g, rest);
  for (const auto& comp : connected_components(sub.graph)) {
    if (comp.size() % 2 == 1) continue;
    auto inner = induced_subgraph(sub.graph, comp);
    auto dec = block_decomposition(inner.graph);
    int pick = -1;
    for (int v = 0; v < inner.graph.n; ++v) {
      if (!set_contains(dec.cut_vertices, v)) {
        pick = sub.old_of_new[inner.old_of_new[v]];
        break;
      }
    }
    p.U.push_back(pick);
  }
  std::sort(p.U.begin(), p.U.end());

  rest = set_difference(all, p.U);
  for (int v : rest) {
    bool isolated = true;
    for (int w : g.adj[v])
      if (set_contains(rest, w)) isolated = false;
    (isolated ? p.S : p.R).push_back(v);
  }
  return p;
}

}  // namespace fdel
