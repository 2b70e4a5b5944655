#pragma once

#include "fdel/graph.hpp"

namespace fdel {

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // biconnected components, by smallest vertex
  VertexSet cut_vertices;
  std::vector<VertexSet> leaf_blocks;  // blocks with at most one cut vertex
};

// Lowpoint DFS. Isolated vertices form no block; every edge lies in
// exactly one block.
BlockDecomposition block_decomposition(const Graph& g);

// Size of the smallest leaf-block. Errors on graphs without blocks.
int slb(const Graph& g);

// |V(G)| >= alpha and no single vertex deletion leaves a component with
// fewer than alpha-1 vertices.
bool is_alpha_robust(const Graph& g, int alpha);

struct PruneResult {
  Graph graph;          // the unique maximal alpha-robust subgraph
  VertexSet vertices;   // its vertex set within the input graph
};
PruneResult alpha_prune(const Graph& g, int alpha);

inline constexpr int kDefaultTreewidthCap = 16;
inline constexpr int kDefaultFvsCap = 32;

// Exact treewidth by subset DP over elimination orders.
// tw(empty) = -1, tw(edgeless nonempty) = 0.
int treewidth_exact(const Graph& g, int cap = kDefaultTreewidthCap);

// Minimum feedback vertex set; lexicographically smallest among minimum ones.
VertexSet fvs_exact(const Graph& g, int cap = kDefaultFvsCap);

}  // namespace fdel
