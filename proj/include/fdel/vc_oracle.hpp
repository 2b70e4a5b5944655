#pragma once

#include <optional>
#include <string>

#include "fdel/graph.hpp"

namespace fdel {

inline constexpr int kDefaultVcCap = 40;

struct QueryRecord {
  int original_n = 0;
  int reduced_n = 0;
  int budget = 0;
  int fvs_of_query = -1;  // exact feedback vertex number, -1 if over the cap
  bool answer = false;

  std::string to_json() const;
};

// Safe Vertex Cover preprocessing applied to a fixed point: isolated
// removal, degree-1 resolution, high-degree rule, matching lower bound.
// The returned budget may be negative, meaning NO.
std::pair<Graph, int> reduce_vc(const Graph& g, int ell);

// Exact decision by branching on a maximum-degree vertex.
bool solve_vc_exact(const Graph& g, int ell, int cap = kDefaultVcCap);

// reduce_vc + solve_vc_exact with size bookkeeping.
std::pair<bool, QueryRecord> vc_oracle(const Graph& g, int ell,
                                       int cap = kDefaultVcCap);

}  // namespace fdel
