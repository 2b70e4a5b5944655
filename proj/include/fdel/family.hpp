#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fdel/graph.hpp"
#include "fdel/minors.hpp"

namespace fdel {

inline constexpr int kFamilyMemberCap = 10;

// Forbidden family F with its derived constants. Members are immutable
// after loading; all derived fields are computed once in from_members.
struct Family {
  std::vector<Graph> members;
  std::vector<std::string> names;

  std::vector<Graph> stripped;   // members minus isolated vertices
  bool has_empty_member = false; // some stripped member has no vertices
  int witness_index = -1;        // index into stripped of M, or -1
  int m = -1;                    // |E(M)| - 1 when M exists
  int alpha = -1;                // max |V(H)| + 3m(delta(H)+1), when M exists
  int min_treewidth = 0;
  int guard_bound = 0;           // max |V(F)| + 2|V(F)|^3

  static Family from_members(std::vector<Graph> members,
                             std::vector<std::string> names = {});

  const Graph& witness() const { return stripped[witness_index]; }
  bool swapped() const;  // true iff some member had an isolated vertex
};

std::vector<Graph> strip_isolated(const std::vector<Graph>& members);

// Index of the P3-subgraph-free member with fewest edges (ties: fewest
// vertices, then input order), or absent.
std::optional<int> p3_free_witness(const std::vector<Graph>& stripped);

int compute_alpha(const std::vector<Graph>& stripped, int m);

int mintw(const std::vector<Graph>& members);

// Target of the family-level hardness reduction: H_up is a minor-maximal
// component, of minimum smallest-leaf-block size, among the
// componentwise-minor-minimal members of minimum treewidth; H is the member
// containing it; c counts components of H isomorphic to H_up.
struct ReductionTarget {
  Graph H;
  Graph H_up;
  int c = 0;
};
ReductionTarget select_reduction_target(const Family& f);

// Family file: one or more blocks "g <name>" followed by a graph in the
// usual text format.
Family read_family(std::istream& in);
Family read_family_file(const std::string& path);

}  // namespace fdel
