#include "fdel/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fdel {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph path_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, std::move(e));
}

Graph cycle_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, std::move(e));
}

Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edges(k, std::move(e));
}

Graph empty_graph(int k) { return Graph::from_edges(k, {}); }

Graph disjoint_copies(int count, const Graph& g) {
  std::vector<Graph> copies(count, g);
  return disjoint_union(copies).graph;
}

UnionResult disjoint_union(const std::vector<Graph>& graphs) {
  UnionResult res;
  int total = 0;
  std::vector<std::pair<int, int>> edges;
  for (const Graph& g : graphs) {
    std::vector<int> map(g.n);
    for (int v = 0; v < g.n; ++v) map[v] = total + v;
    for (auto [u, v] : g.edges) edges.emplace_back(total + u, total + v);
    res.maps.push_back(std::move(map));
    total += g.n;
  }
  res.graph = Graph::from_edges(total, std::move(edges));
  return res;
}

IdentifyResult identify(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");
  if (u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw std::invalid_argument("identify: vertex not present");
  if (u > v) std::swap(u, v);
  IdentifyResult res;
  res.map.assign(g.n, -1);
  int next = 0;
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    res.map[w] = next++;
  }
  res.map[v] = res.map[u];
  res.merged = res.map[u];
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges) {
    int x = res.map[a], y = res.map[b];
    if (x != y) edges.emplace_back(x, y);
  }
  res.graph = Graph::from_edges(g.n - 1, std::move(edges));
  return res;
}

InducedResult induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedResult res;
  res.new_of_old.assign(g.n, -1);
  for (int v : keep) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: vertex not in graph");
    if (res.new_of_old[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    res.new_of_old[v] = 0;
  }
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    if (res.new_of_old[v] == 0) {
      res.new_of_old[v] = next++;
      res.old_of_new.push_back(v);
    } else {
      res.new_of_old[v] = -1;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    int x = res.new_of_old[u], y = res.new_of_old[v];
    if (x != -1 && y != -1) edges.emplace_back(x, y);
  }
  res.graph = Graph::from_edges(next, std::move(edges));
  return res;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<int> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.n == 0 || connected_components(g).size() == 1;
}

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return static_cast<int>(g.edges.size()) == g.n - static_cast<int>(comps.size());
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet res;
  for (int v = 0; v < g.n; ++v)
    if (g.adj[v].empty()) res.push_back(v);
  return res;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(g.n, 0), out(g.n, 0);
  for (int v : s) in_s[v] = 1;
  for (int v : s)
    for (int w : g.adj[v])
      if (!in_s[w]) out[w] = 1;
  VertexSet res;
  for (int v = 0; v < g.n; ++v)
    if (out[v]) res.push_back(v);
  return res;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet res;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(res));
  return res;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet res;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(res));
  return res;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet res;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(res));
  return res;
}

bool set_contains(const VertexSet& a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

VertexSet full_vertex_set(const Graph& g) {
  VertexSet res(g.n);
  for (int v = 0; v < g.n; ++v) res[v] = v;
  return res;
}

VertexSet complement_set(const Graph& g, const VertexSet& s) {
  return set_difference(full_vertex_set(g), s);
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        throw parse_error("bad problem line: " + line);
    } else if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw parse_error("bad edge line: " + line);
      if (n < 0) throw parse_error("edge line before problem line");
      if (u < 1 || v < 1 || u > n || v > n)
        throw parse_error("edge endpoint out of range: " + line);
      if (u == v) throw parse_error("self-loop: " + line);
      edges.emplace_back(u - 1, v - 1);
    } else if (tag == "g") {
      throw parse_error("unexpected family block in graph file");
    } else {
      throw parse_error("unknown line: " + line);
    }
  }
  if (n < 0) throw parse_error("missing problem line");
  if (static_cast<int>(edges.size()) != m)
    throw parse_error("edge count does not match problem line");
  return Graph::from_edges(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace fdel
