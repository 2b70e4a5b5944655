#pragma once

#include <functional>
#include <random>

#include "fdel/graph.hpp"

// Independent reference implementations used to validate the library.
// Everything here is deliberately naive and exhaustive.
namespace oracle {

using fdel::Graph;
using fdel::VertexSet;

// All labeled graphs on n vertices.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

// Representatives of isomorphism classes; connected_only drops the rest.
// Results are cached per (n, connected_only).
const std::vector<Graph>& graphs_up_to_iso(int n, bool connected_only);

Graph random_graph(int n, double p, std::mt19937& rng);

Graph petersen();

// Matching number by recursion over edges.
int nu_exhaustive(const Graph& g);

// Minimum vertex cover size by subset enumeration.
int vc_exhaustive(const Graph& g);

// Vertex set of the maximum alpha-robust induced subgraph, by subset
// enumeration; asserts that it contains every other robust subset.
VertexSet robust_max_exhaustive(const Graph& g, int alpha);

// Injective edge-preserving map exists, by brute enumeration.
bool subgraph_oracle(const Graph& g, const Graph& h);

// Minor containment by enumerating all assignments of G-vertices to
// branch sets.
bool minor_oracle(const Graph& g, const Graph& h);

}  // namespace oracle
