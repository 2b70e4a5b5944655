#pragma once

#include <optional>

#include "fdel/graph.hpp"

namespace fdel {

// Maximum-cardinality matching (Edmonds blossom).
std::vector<std::pair<int, int>> max_matching(const Graph& g);

inline int matching_number(const Graph& g) {
  return static_cast<int>(max_matching(g).size());
}

// Witness that nu(G) <= m: U, R, S partition V(G); components of G[R] are
// odd of size >= 3; G[S] edgeless; N(S) subset of U; |U| + (|R|-odd(G[R]))/2 <= m.
struct TBPartition {
  VertexSet U, R, S;
};

inline constexpr int kDefaultTuttBergeCap = 20;

// Present iff nu(G) <= m; construction follows the Tutte-Berge witness with
// an even-component fix-up. Exhaustive witness search, capped.
std::optional<TBPartition> tutte_berge_partition(const Graph& g, int m,
                                                 int cap = kDefaultTuttBergeCap);

bool verify_partition(const Graph& g, const TBPartition& p, int m);

}  // namespace fdel
