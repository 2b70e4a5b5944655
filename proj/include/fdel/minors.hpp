#pragma once

#include <optional>

#include "fdel/graph.hpp"

namespace fdel {

enum class ContainType { minor, subgraph };

inline const char* to_string(ContainType t) {
  return t == ContainType::minor ? "minor" : "subgraph";
}

inline constexpr int kDefaultPatternCap = 12;

// Branch-set map witnessing H as a minor of G: branch_sets[u] for u in V(H)
// is a nonempty connected set in G; sets are pairwise disjoint and every
// H-edge is realized between its two sets.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

bool valid_minor_model(const Graph& g, const Graph& h, const MinorModel& model);

// Injective edge-preserving map V(H) -> V(G), or absent. Deterministic
// first-found under canonical branching.
std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Graph& h,
                                                  int cap = kDefaultPatternCap);

// A minor model, minimal under branch-set shrinking, or absent.
std::optional<MinorModel> contains_minor(const Graph& g, const Graph& h,
                                         int cap = kDefaultPatternCap);

// Every connected component of H is a minor of G.
bool componentwise_minor(const Graph& h, const Graph& g,
                         int cap = kDefaultPatternCap);

bool contains_type(const Graph& g, const Graph& h, ContainType type,
                   int cap = kDefaultPatternCap);

// No member of `members` is contained in G under the given relation.
bool is_type_free(const Graph& g, const std::vector<Graph>& members,
                  ContainType type, int cap = kDefaultPatternCap);

// At least `target` pairwise vertex-disjoint H-subgraphs exist in G.
bool disjoint_packing_at_least(const Graph& g, const Graph& h, int target,
                               int cap = kDefaultPatternCap);

bool graph_isomorphic(const Graph& g, const Graph& h);

}  // namespace fdel
