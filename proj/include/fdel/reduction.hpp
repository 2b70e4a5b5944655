#pragma once

#include <iosfwd>
#include <string>

#include "fdel/family.hpp"
#include "fdel/graph.hpp"

namespace fdel {

struct CnfFormula {
  int k = 0;  // variable count, variables 1..k
  std::vector<std::vector<int>> clauses;  // literals: +i or -i

  int m_clauses() const { return static_cast<int>(clauses.size()); }
  int n_literals() const {
    int n = 0;
    for (const auto& c : clauses) n += static_cast<int>(c.size());
    return n;
  }
};

// DIMACS CNF: "p cnf <k> <m>", clauses as 0-terminated integer lists.
// Empty clauses and duplicate literals within a clause are rejected.
CnfFormula read_cnf(std::istream& in);
CnfFormula read_cnf_file(const std::string& path);

// Labels of one chained copy of the core gadget graph M.
struct CopyLabels {
  int u = -1, v = -1, w = -1, s = -1, t = -1;
  VertexSet H1, H2, L3, R1, R2, L1, L2;
};

struct GadgetLabels {
  std::vector<CopyLabels> copies;  // 2n-1 copies, index i-1 holds copy i
  // S in copy order: S[i-1] is the v-vertex of copy i, for i <= n.
  // Deliberately not sorted; the order drives clause-literal identification.
  std::vector<int> S;

  int n() const { return static_cast<int>(S.size()); }
};

// The clause gadget: chain 2n-1 copies of M, built from two copies of H and
// one of its smallest leaf-block L.
std::pair<Graph, GadgetLabels> clause_gadget(const Graph& h, int n);

// The explicit deletion set of size 3n-1 hitting every H-model, containing
// the j-th S-vertex; 1 <= j <= n.
VertexSet clause_gadget_solution(const GadgetLabels& labels, int j);

struct VariableLabels {
  int v_pos = -1, v_neg = -1;  // vertices standing for x_i and not-x_i
  VertexSet vertices;          // the whole variable copy of H
};

struct ReductionArtifact {
  Graph graph;
  int ell = 0;
  VertexSet modulator;  // S; graph - S has treewidth <= tw(H)
  std::vector<GadgetLabels> clause_labels;
  std::vector<VariableLabels> variable_labels;
};

// Hard-instance generator for a single connected H with >= 3 vertices:
// one H-copy per variable, one clause gadget per clause, S-vertices
// identified with literal vertices in written clause order; budget
// ell = k + 3n - 2m.
ReductionArtifact build_instance_connected(const Graph& h, const CnfFormula& phi);

// Family-level generator: (2c-1) copies of the connected instance for the
// selected component H_up, padded with (ell+1) copies of the rest of H.
ReductionArtifact build_instance_family(const Family& f, const CnfFormula& phi);

// Explicit deletion set of size exactly ell assembled from a satisfying
// assignment: the true literal vertex per variable copy plus, per clause
// gadget, the solution through a satisfied literal.
VertexSet instance_solution(const ReductionArtifact& art, const CnfFormula& phi,
                            const std::vector<bool>& assignment);

struct GadgetReport {
  bool tw_ok = false;
  bool packing_ok = false;
  bool packing_minus_s_ok = false;
  std::vector<bool> solution_ok;  // one entry per j
  std::vector<std::string> failures;

  bool all_ok() const;
};

inline constexpr int kVerifyVertexCap = 4;
inline constexpr int kVerifyOccurrenceCap = 2;
inline constexpr int kVerifyTreewidthCap = 20;

// Mechanical check of the gadget conditions at desk scale; refuses larger
// inputs instead of skipping checks.
GadgetReport verify_gadget(const Graph& h, int n,
                           int vertex_cap = kVerifyVertexCap,
                           int occurrence_cap = kVerifyOccurrenceCap);

}  // namespace fdel
