#pragma once

#include <iosfwd>
#include <optional>

#include "fdel/family.hpp"
#include "fdel/graph.hpp"
#include "fdel/minors.hpp"
#include "fdel/vc_oracle.hpp"

namespace fdel {

inline constexpr int kDefaultBruteCap = 16;

struct DeletionInstance {
  Graph graph;
  int ell = 0;
  ContainType type = ContainType::minor;
  Family family;
};

// f : 2^U -> 2^Q, stored sparsely; classes mapped to the empty set may be
// omitted.
struct TypeFunction {
  std::vector<std::pair<VertexSet, VertexSet>> assignment;  // (Y, f(Y))

  VertexSet image() const;
  const VertexSet* at(const VertexSet& y) const;
};

bool valid_type_function(const Graph& g, const VertexSet& u,
                         const VertexSet& q, const TypeFunction& f, int alpha);

VertexSet compute_Q(const Graph& g, const VertexSet& u, const VertexSet& r);

// {v in Q \ f(2^U) : |f(N(v) cap U)| < alpha}
VertexSet compute_Qprime(const Graph& g, const VertexSet& u, const VertexSet& q,
                         const TypeFunction& f, int alpha);

struct IssuedQuery {
  VertexSet vertices;  // query graph = G[vertices]
  QueryRecord record;
};

struct SolveOptions {
  int pattern_cap = kDefaultPatternCap;
  int vc_cap = kDefaultVcCap;
  int brute_cap = kDefaultBruteCap;
  bool check_witnesses = false;   // reassemble and verify X per accepted query
  std::ostream* query_log = nullptr;  // JSON lines, one QueryRecord each
};

struct SolveResult {
  bool yes = false;
  std::optional<VertexSet> witness;  // populated on the brute paths
  std::vector<IssuedQuery> queries;
  const char* engine = "";  // "turing" or "brute"
};

// Exact decision. Small instances of families with isolated vertices go to
// brute force; otherwise the family is stripped and the enumeration over
// (U, R, f) drives the VC oracle.
SolveResult solve(const DeletionInstance& instance, const SolveOptions& opts = {});

// Minimum-size deletion set of size <= ell leaving no member contained, or
// absent. Exact; capped by min(ell, n - ell) <= cap.
std::optional<VertexSet> brute_force_delete(const Graph& g,
                                            const std::vector<Graph>& members,
                                            ContainType type, int ell,
                                            int cap = kDefaultBruteCap,
                                            int pattern_cap = kDefaultPatternCap);

std::optional<VertexSet> brute_force_delete(const Graph& g, const Family& family,
                                            ContainType type, int ell,
                                            int cap = kDefaultBruteCap,
                                            int pattern_cap = kDefaultPatternCap);

}  // namespace fdel
