#include "fdel/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace fdel {

namespace {

struct BlockDfs {
  const Graph& g;
  std::vector<int> num, low;
  std::vector<char> is_cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::set<int>> block_sets;
  int counter = 0;

  explicit BlockDfs(const Graph& g)
      : g(g), num(g.n, -1), low(g.n, 0), is_cut(g.n, 0) {}

  void pop_block(std::pair<int, int> until) {
    std::set<int> block;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e == until) break;
    }
    block_sets.push_back(std::move(block));
  }

  void dfs(int v, int parent) {
    num[v] = low[v] = counter++;
    int children = 0;
    for (int w : g.adj[v]) {
      if (w == parent) {
        parent = -2;  // skip the tree edge once; parallel edges cannot occur
        continue;
      }
      if (num[w] == -1) {
        ++children;
        edge_stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          if (parent != -1 || children > 1) is_cut[v] = 1;
          pop_block({v, w});
        }
      } else if (num[w] < num[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], num[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDfs dfs(g);
  for (int v = 0; v < g.n; ++v)
    if (dfs.num[v] == -1 && !g.adj[v].empty()) dfs.dfs(v, -1);

  BlockDecomposition res;
  for (auto& s : dfs.block_sets) res.blocks.emplace_back(s.begin(), s.end());
  std::sort(res.blocks.begin(), res.blocks.end());
  for (int v = 0; v < g.n; ++v)
    if (dfs.is_cut[v]) res.cut_vertices.push_back(v);
  for (const auto& block : res.blocks) {
    int cuts = 0;
    for (int v : block)
      if (dfs.is_cut[v]) ++cuts;
    if (cuts <= 1) res.leaf_blocks.push_back(block);
  }
  return res;
}

int slb(const Graph& g) {
  auto dec = block_decomposition(g);
  if (dec.blocks.empty())
    throw std::invalid_argument("slb: graph has no blocks (edgeless)");
  int best = std::numeric_limits<int>::max();
  for (const auto& block : dec.leaf_blocks)
    best = std::min(best, static_cast<int>(block.size()));
  return best;
}

bool is_alpha_robust(const Graph& g, int alpha) {
  if (alpha < 1) throw std::invalid_argument("is_alpha_robust: alpha < 1");
  if (g.n < alpha) return false;
  if (alpha <= 2) {
    // components smaller than alpha-1 <= 1 vertex cannot exist
    return true;
  }
  VertexSet all = full_vertex_set(g);
  for (int v = 0; v < g.n; ++v) {
    VertexSet rest = set_difference(all, {v});
    for (const auto& comp : connected_components(induced_subgraph(g, rest).graph))
      if (static_cast<int>(comp.size()) < alpha - 1) return false;
  }
  return true;
}

PruneResult alpha_prune(const Graph& g, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha_prune: alpha < 1");
  if (alpha <= 2) {
    // robustness degenerates to a vertex-count condition
    PruneResult res;
    if (g.n >= alpha) {
      res.graph = g;
      res.vertices = full_vertex_set(g);
    }
    return res;
  }
  VertexSet keep = full_vertex_set(g);
  bool changed = true;
  while (changed) {
    changed = false;
    auto ind = induced_subgraph(g, keep);
    const Graph& cur = ind.graph;
    // whole components smaller than alpha carry no alpha-robust subgraph
    VertexSet drop;
    for (const auto& comp : connected_components(cur))
      if (static_cast<int>(comp.size()) < alpha)
        for (int v : comp) drop.push_back(v);
    if (drop.empty() && alpha >= 3) {
      // a component of cur - v smaller than alpha-1 meets no alpha-robust
      // subgraph; the pivot v itself may survive
      for (int v = 0; v < cur.n && drop.empty(); ++v) {
        VertexSet rest = set_difference(full_vertex_set(cur), {v});
        auto sub = induced_subgraph(cur, rest);
        for (const auto& comp : connected_components(sub.graph)) {
          if (static_cast<int>(comp.size()) < alpha - 1) {
            for (int w : comp) drop.push_back(sub.old_of_new[w]);
            break;
          }
        }
      }
    }
    if (!drop.empty()) {
      std::sort(drop.begin(), drop.end());
      VertexSet drop_host;
      for (int v : drop) drop_host.push_back(ind.old_of_new[v]);
      std::sort(drop_host.begin(), drop_host.end());
      keep = set_difference(keep, drop_host);
      changed = true;
    }
  }
  PruneResult res;
  res.vertices = keep;
  res.graph = induced_subgraph(g, keep).graph;
  return res;
}

int treewidth_exact(const Graph& g, int cap) {
  if (g.n > cap)
    throw cap_error("treewidth_exact: " + std::to_string(g.n) +
                    " vertices exceeds cap " + std::to_string(cap) +
                    " (raise the cap to override)");
  if (g.n == 0) return -1;
  const int n = g.n;
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::int8_t> dp(std::size_t{1} << n, 0);
  dp[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t rem = s; rem; rem &= rem - 1) {
      int v = std::countr_zero(rem);
      std::uint32_t prev = s & ~(1u << v);
      // component of v in G[prev + v], then its outside neighbors
      std::uint32_t comp = 1u << v;
      while (true) {
        std::uint32_t nb = 0;
        for (std::uint32_t c = comp; c; c &= c - 1)
          nb |= adj[std::countr_zero(c)];
        std::uint32_t grown = comp | (nb & prev);
        if (grown == comp) break;
        comp = grown;
      }
      std::uint32_t nb = 0;
      for (std::uint32_t c = comp; c; c &= c - 1)
        nb |= adj[std::countr_zero(c)];
      int q = std::popcount(nb & ~prev & ~(1u << v));
      best = std::min(best, std::max(static_cast<int>(dp[prev]), q));
    }
    dp[s] = static_cast<std::int8_t>(best);
  }
  return dp[full];
}

namespace {

// Remove degree <= 1 vertices, then return a shortest cycle, or empty if
// the graph restricted to `alive` is a forest.
VertexSet shortest_cycle(const Graph& g, std::vector<char> alive) {
  std::vector<int> deg(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    if (alive[v])
      for (int w : g.adj[v])
        if (alive[w]) ++deg[v];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (alive[v] && deg[v] <= 1) {
        alive[v] = 0;
        for (int w : g.adj[v])
          if (alive[w]) --deg[w];
        changed = true;
      }
    }
  }
  VertexSet best;
  for (int s = 0; s < g.n; ++s) {
    if (!alive[s]) continue;
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v]) {
        if (!alive[w]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          q.push(w);
        } else if (par[v] != w && par[w] != v) {
          // cycle through s via v and w (may be longer than the girth of
          // this component, but short enough for branching)
          VertexSet cyc;
          for (int x = v; x != -1; x = par[x]) cyc.push_back(x);
          for (int x = w; x != -1; x = par[x]) cyc.push_back(x);
          std::sort(cyc.begin(), cyc.end());
          cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
          if (best.empty() || cyc.size() < best.size()) best = cyc;
        }
      }
    }
  }
  return best;
}

// Minimum number of deletions (all from `allowed`) making G[alive] a forest;
// returns > budget when impossible within budget.
int min_fvs_constrained(const Graph& g, std::vector<char>& alive,
                        const std::vector<char>& allowed, int budget) {
  VertexSet cyc = shortest_cycle(g, alive);
  if (cyc.empty()) return 0;
  if (budget <= 0) return budget + 1;
  int best = budget + 1;
  for (int v : cyc) {
    if (!allowed[v]) continue;
    alive[v] = 0;
    int sub = min_fvs_constrained(g, alive, allowed, std::min(budget, best - 1) - 1);
    alive[v] = 1;
    best = std::min(best, 1 + sub);
  }
  return best;
}

}  // namespace

VertexSet fvs_exact(const Graph& g, int cap) {
  if (g.n > cap)
    throw cap_error("fvs_exact: " + std::to_string(g.n) +
                    " vertices exceeds cap " + std::to_string(cap));
  std::vector<char> alive(g.n, 1), allowed(g.n, 1);
  int size = 0;
  while (min_fvs_constrained(g, alive, allowed, size) > size) ++size;

  // lexicographically smallest set of minimum size
  VertexSet chosen;
  int remaining = size;
  for (int v = 0; v < g.n && remaining > 0; ++v) {
    alive[v] = 0;
    allowed[v] = 0;
    int need = min_fvs_constrained(g, alive, allowed, remaining - 1);
    if (need <= remaining - 1) {
      chosen.push_back(v);
      --remaining;
    } else {
      alive[v] = 1;  // v excluded from the solution from here on
    }
  }
  return chosen;
}

}  // namespace fdel
