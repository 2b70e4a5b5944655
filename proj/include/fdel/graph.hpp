#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdel {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when Algorithm 1 is requested for a family without a
// P3-subgraph-free member.
struct regime_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted list of distinct vertex ids of some Graph.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Treat as immutable after
// construction; all operations below return new graphs.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, lexicographically sorted
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool empty() const { return n == 0; }

  bool operator==(const Graph& other) const {
    return n == other.n && edges == other.edges;
  }
};

// Small named graphs used throughout tests and family handling.
Graph path_graph(int k);      // P_k on k vertices
Graph cycle_graph(int k);     // C_k, k >= 3
Graph complete_graph(int k);  // K_k
Graph empty_graph(int k);     // k isolated vertices
Graph disjoint_copies(int count, const Graph& g);  // count * g

struct UnionResult {
  Graph graph;
  // maps[i][v] = vertex of graph corresponding to vertex v of input i
  std::vector<std::vector<int>> maps;
};
UnionResult disjoint_union(const std::vector<Graph>& graphs);

struct IdentifyResult {
  Graph graph;
  std::vector<int> map;  // old id -> new id; map[u] == map[v] == merged
  int merged = -1;
};
// Merge u and v into a single vertex; parallel edges collapse, no self-loop.
IdentifyResult identify(const Graph& g, int u, int v);

struct InducedResult {
  Graph graph;
  std::vector<int> old_of_new;  // new id -> id in the host graph
  std::vector<int> new_of_old;  // host id -> new id, -1 if dropped
};
InducedResult induced_subgraph(const Graph& g, const VertexSet& keep);

// Partition of V(G) into maximal connected sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);  // true for the empty graph
bool is_forest(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

VertexSet neighborhood(const Graph& g, const VertexSet& s);  // open N(S)

// Set helpers over sorted VertexSets.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
VertexSet full_vertex_set(const Graph& g);
VertexSet complement_set(const Graph& g, const VertexSet& s);

// DIMACS-like text format: "p edge <n> <m>", then "e <u> <v>" with
// 1-indexed endpoints; "c" comment lines ignored. Output is canonical:
// u < v, edges sorted.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace fdel
