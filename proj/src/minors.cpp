#include "fdel/minors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace fdel {

namespace {

void check_pattern_cap(const Graph& h, int cap) {
  if (h.n > cap)
    throw cap_error("pattern with " + std::to_string(h.n) +
                    " vertices exceeds cap " + std::to_string(cap));
}

// Placement order for pattern vertices: components by smallest vertex, BFS
// from the smallest vertex inside each (optionally forcing a start vertex's
// component first, beginning at that vertex).
std::vector<int> pattern_order(const Graph& h, int forced_start = -1) {
  std::vector<int> order;
  std::vector<char> seen(h.n, 0);
  auto bfs = [&](int s) {
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : h.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  };
  if (forced_start >= 0) bfs(forced_start);
  for (int v = 0; v < h.n; ++v)
    if (!seen[v]) bfs(v);
  return order;
}

std::vector<std::vector<int>> placed_neighbors(const Graph& h,
                                               const std::vector<int>& order) {
  std::vector<int> pos(h.n);
  for (int i = 0; i < h.n; ++i) pos[order[i]] = i;
  std::vector<std::vector<int>> res(h.n);
  for (int i = 0; i < h.n; ++i) {
    for (int w : h.adj[order[i]])
      if (pos[w] < i) res[i].push_back(w);
  }
  return res;
}

// ---- subgraph embedding -------------------------------------------------

struct SubgraphSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;
  std::vector<std::vector<int>> prev_nb;
  std::vector<int> map;        // H vertex -> G vertex or -1
  std::vector<char> used;      // G vertices taken by the embedding
  const std::vector<char>* avoid = nullptr;  // G vertices not usable
  std::function<bool(const std::vector<int>&)> emit;  // true = stop

  SubgraphSearch(const Graph& g, const Graph& h, int forced_h = -1)
      : g(g), h(h), order(pattern_order(h, forced_h)),
        prev_nb(placed_neighbors(h, order)), map(h.n, -1), used(g.n, 0) {}

  bool usable(int v) const { return !used[v] && !(avoid && (*avoid)[v]); }

  bool run(int idx) {
    if (idx == h.n) return emit(map);
    int u = order[idx];
    if (map[u] != -1) return run(idx + 1);  // pre-assigned
    for (int v = 0; v < g.n; ++v) {
      if (!usable(v)) continue;
      if (g.degree(v) < h.degree(u)) continue;
      bool ok = true;
      for (int p : prev_nb[idx])
        if (!g.has_edge(v, map[p])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (run(idx + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  }
};

// ---- minor models -------------------------------------------------------

struct MinorSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;
  std::vector<std::vector<int>> prev_nb;
  std::vector<VertexSet> phi;
  std::vector<char> used;
  // blocked[v] == idx+1 bans v from the branch set being enumerated at
  // placement level idx; deeper levels are unaffected
  std::vector<int> blocked;
  int free_count;

  MinorSearch(const Graph& g, const Graph& h)
      : g(g), h(h), order(pattern_order(h)), prev_nb(placed_neighbors(h, order)),
        phi(h.n), used(g.n, 0), blocked(g.n, 0), free_count(g.n) {}

  bool touches(const VertexSet& b, const VertexSet& other) const {
    for (int x : b)
      for (int y : other)
        if (g.has_edge(x, y)) return true;
    return false;
  }

  bool place(int idx) {
    if (idx == h.n) return true;
    int u = order[idx];
    const auto& req = prev_nb[idx];
    int maxsize = free_count - (h.n - idx - 1);
    if (maxsize <= 0) return false;

    // canonical roots: smallest vertex of the branch set, or smallest
    // contact vertex with the first already-placed neighbor set
    std::vector<int> roots;
    if (req.empty()) {
      for (int v = 0; v < g.n; ++v)
        if (!used[v]) roots.push_back(v);
    } else {
      std::vector<char> seen(g.n, 0);
      for (int x : phi[req[0]])
        for (int w : g.adj[x])
          if (!used[w] && !seen[w]) {
            seen[w] = 1;
            roots.push_back(w);
          }
      std::sort(roots.begin(), roots.end());
    }
    std::vector<std::pair<int, int>> saved;
    bool found = false;
    for (int r : roots) {
      if (blocked[r] == idx + 1) continue;
      VertexSet b{r};
      if (grow(idx, u, b, maxsize)) {
        found = true;
        break;
      }
      saved.emplace_back(r, blocked[r]);
      blocked[r] = idx + 1;
    }
    for (auto [v, old] : saved) blocked[v] = old;
    return found;
  }

  bool grow(int idx, int u, VertexSet& b, int maxsize) {
    const auto& req = prev_nb[idx];
    bool ok = true;
    for (std::size_t i = 1; i < req.size(); ++i)
      if (!touches(b, phi[req[i]])) {
        ok = false;
        break;
      }
    if (ok && !req.empty() && b.size() > 1 && !touches(b, phi[req[0]])) ok = false;
    if (ok && !req.empty() && b.size() == 1) {
      // root was chosen as a contact of phi[req[0]] already
    }
    if (ok) {
      phi[u] = b;
      for (int v : b) used[v] = 1;
      free_count -= static_cast<int>(b.size());
      if (place(idx + 1)) return true;
      for (int v : b) used[v] = 0;
      free_count += static_cast<int>(b.size());
      phi[u].clear();
    }
    if (static_cast<int>(b.size()) >= maxsize) return false;
    // extensions: free unblocked neighbors of b, each blocked for the
    // later iterations so every connected set is produced exactly once
    std::vector<int> cand;
    {
      std::vector<char> seen(g.n, 0);
      for (int x : b) seen[x] = 1;
      for (int x : b)
        for (int w : g.adj[x])
          if (!seen[w] && !used[w] && blocked[w] != idx + 1) {
            seen[w] = 1;
            cand.push_back(w);
          }
      std::sort(cand.begin(), cand.end());
    }
    std::vector<std::pair<int, int>> saved;
    bool found = false;
    for (int v : cand) {
      if (blocked[v] == idx + 1) continue;
      b.push_back(v);
      std::sort(b.begin(), b.end());
      if (grow(idx, u, b, maxsize)) {
        found = true;
        break;
      }
      b.erase(std::find(b.begin(), b.end(), v));
      saved.emplace_back(v, blocked[v]);
      blocked[v] = idx + 1;
    }
    for (auto [v, old] : saved) blocked[v] = old;
    return found;
  }
};

bool branch_set_ok(const Graph& g, const Graph& h, const MinorModel& m, int u) {
  const VertexSet& b = m.branch_sets[u];
  if (b.empty()) return false;
  if (!is_connected(induced_subgraph(g, b).graph)) return false;
  for (int w : h.adj[u]) {
    bool hit = false;
    for (int x : b) {
      for (int y : m.branch_sets[w])
        if (g.has_edge(x, y)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit) return false;
  }
  return true;
}

void minimize_model(const Graph& g, const Graph& h, MinorModel& m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < h.n; ++u) {
      for (std::size_t i = 0; i < m.branch_sets[u].size(); ++i) {
        if (m.branch_sets[u].size() == 1) break;
        int v = m.branch_sets[u][i];
        MinorModel trial = m;
        auto& b = trial.branch_sets[u];
        b.erase(std::find(b.begin(), b.end(), v));
        if (branch_set_ok(g, h, trial, u)) {
          m = std::move(trial);
          changed = true;
          --i;
        }
      }
    }
  }
}

// Vertices of G that can appear in a minimal model of a pattern with
// minimum degree >= 2: iteratively drop degree <= 1 vertices.
VertexSet two_core(const Graph& g) {
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::vector<char> alive(g.n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && deg[v] <= 1) {
        alive[v] = 0;
        for (int w : g.adj[v])
          if (alive[w]) --deg[w];
        changed = true;
      }
  }
  VertexSet keep;
  for (int v = 0; v < g.n; ++v)
    if (alive[v]) keep.push_back(v);
  return keep;
}

}  // namespace

bool valid_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
  if (static_cast<int>(m.branch_sets.size()) != h.n) return false;
  std::vector<char> used(g.n, 0);
  for (const auto& b : m.branch_sets)
    for (int v : b) {
      if (v < 0 || v >= g.n || used[v]) return false;
      used[v] = 1;
    }
  for (int u = 0; u < h.n; ++u)
    if (!branch_set_ok(g, h, m, u)) return false;
  return true;
}

std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Graph& h,
                                                  int cap) {
  check_pattern_cap(h, cap);
  if (h.n > g.n) return std::nullopt;
  SubgraphSearch search(g, h);
  std::optional<std::vector<int>> result;
  search.emit = [&](const std::vector<int>& map) {
    result = map;
    return true;
  };
  search.run(0);
  return result;
}

std::optional<MinorModel> contains_minor(const Graph& g, const Graph& h, int cap) {
  check_pattern_cap(h, cap);
  if (h.n > g.n) return std::nullopt;
  if (static_cast<int>(h.edges.size()) > static_cast<int>(g.edges.size()))
    return std::nullopt;

  int min_deg = h.n == 0 ? 0 : g.n;
  for (int u = 0; u < h.n; ++u) min_deg = std::min(min_deg, h.degree(u));
  if (h.n > 0 && min_deg >= 2) {
    auto core = two_core(g);
    if (static_cast<int>(core.size()) < g.n) {
      auto sub = induced_subgraph(g, core);
      auto inner = contains_minor(sub.graph, h, cap);
      if (!inner) return std::nullopt;
      for (auto& b : inner->branch_sets)
        for (int& v : b) v = sub.old_of_new[v];
      return inner;
    }
  }

  MinorSearch search(g, h);
  if (!search.place(0)) return std::nullopt;
  MinorModel model;
  model.branch_sets = std::move(search.phi);
  minimize_model(g, h, model);
  return model;
}

bool componentwise_minor(const Graph& h, const Graph& g, int cap) {
  for (const auto& comp : connected_components(h)) {
    Graph hc = induced_subgraph(h, comp).graph;
    if (!contains_minor(g, hc, cap)) return false;
  }
  return true;
}

bool contains_type(const Graph& g, const Graph& h, ContainType type, int cap) {
  if (type == ContainType::subgraph) return contains_subgraph(g, h, cap).has_value();
  return contains_minor(g, h, cap).has_value();
}

bool is_type_free(const Graph& g, const std::vector<Graph>& members,
                  ContainType type, int cap) {
  for (const Graph& h : members)
    if (contains_type(g, h, type, cap)) return false;
  return true;
}

bool disjoint_packing_at_least(const Graph& g, const Graph& h, int target,
                               int cap) {
  check_pattern_cap(h, cap);
  if (target <= 0) return true;
  if (h.n == 0) return true;  // empty subgraphs pack trivially

  std::vector<char> dead(g.n, 0);
  std::function<bool(int)> pack = [&](int t) -> bool {
    if (t == 0) return true;
    int free = 0;
    int pivot = -1;
    for (int v = 0; v < g.n; ++v)
      if (!dead[v]) {
        ++free;
        if (pivot == -1) pivot = v;
      }
    if (free < t * h.n) return false;
    // either some copy uses the pivot, or the pivot is unused
    for (int u = 0; u < h.n; ++u) {
      SubgraphSearch search(g, h, u);
      search.avoid = &dead;
      search.map[u] = pivot;
      search.used[pivot] = 1;
      bool found = false;
      search.emit = [&](const std::vector<int>& map) {
        for (int v : map) dead[v] = 1;
        found = pack(t - 1);
        if (!found)
          for (int v : map) dead[v] = 0;
        return found;
      };
      if (search.run(0)) return true;
      (void)found;
    }
    dead[pivot] = 1;
    bool ok = pack(t);
    dead[pivot] = 0;
    return ok;
  };
  return pack(target);
}

bool graph_isomorphic(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
  auto degseq = [](const Graph& x) {
    std::vector<int> d;
    for (int v = 0; v < x.n; ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(g) != degseq(h)) return false;

  std::vector<int> map(h.n, -1);
  std::vector<char> used(g.n, 0);
  std::function<bool(int)> assign = [&](int u) -> bool {
    if (u == h.n) return true;
    for (int v = 0; v < g.n; ++v) {
      if (used[v] || g.degree(v) != h.degree(u)) continue;
      bool ok = true;
      for (int w = 0; w < u; ++w)
        if (h.has_edge(u, w) != g.has_edge(v, map[w])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (assign(u + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  };
  return assign(0);
}

}  // namespace fdel
