#include "fdel/vc_oracle.hpp"

#include <algorithm>
#include <sstream>

#include "fdel/matching.hpp"
#include "fdel/structure.hpp"

namespace fdel {

std::string QueryRecord::to_json() const {
  std::ostringstream out;
  out << "{\"original_n\":" << original_n << ",\"reduced_n\":" << reduced_n
      << ",\"budget\":" << budget << ",\"fvs_of_query\":" << fvs_of_query
      << ",\"answer\":" << (answer ? "true" : "false") << "}";
  return out.str();
}

std::pair<Graph, int> reduce_vc(const Graph& g, int ell) {
  if (ell < 0) throw std::invalid_argument("reduce_vc: ell < 0");
  Graph cur = g;
  bool changed = true;
  while (changed && ell >= 0) {
    changed = false;
    VertexSet iso = isolated_vertices(cur);
    if (!iso.empty()) {
      cur = induced_subgraph(cur, complement_set(cur, iso)).graph;
      changed = true;
      continue;
    }
    // any vertex of degree > ell belongs to every cover of size <= ell
    for (int v = 0; v < cur.n; ++v) {
      if (cur.degree(v) > ell) {
        cur = induced_subgraph(cur, complement_set(cur, {v})).graph;
        --ell;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // degree-1: take the neighbor
    for (int v = 0; v < cur.n; ++v) {
      if (cur.degree(v) == 1) {
        int w = cur.adj[v][0];
        VertexSet drop = {std::min(v, w), std::max(v, w)};
        cur = induced_subgraph(cur, complement_set(cur, drop)).graph;
        --ell;
        changed = true;
        break;
      }
    }
  }
  if (ell >= 0 && matching_number(cur) > ell) ell = -1;
  return {cur, ell};
}

namespace {

bool vc_branch(const Graph& g, std::vector<char>& alive,
               std::vector<int>& deg, int ell) {
  if (ell < 0) return false;
  int best = -1;
  for (int v = 0; v < g.n; ++v)
    if (alive[v] && deg[v] > 0 && (best == -1 || deg[v] > deg[best])) best = v;
  if (best == -1) return true;
  if (deg[best] == 1) {
    // all remaining degrees <= 1: a disjoint union of edges
    int need = 0;
    for (auto [u, v] : g.edges)
      if (alive[u] && alive[v]) ++need;
    return need <= ell;
  }
  auto remove = [&](int v) {
    alive[v] = 0;
    for (int w : g.adj[v])
      if (alive[w]) --deg[w];
  };
  auto restore = [&](int v) {
    alive[v] = 1;
    for (int w : g.adj[v])
      if (alive[w]) ++deg[w];
  };
  remove(best);
  if (vc_branch(g, alive, deg, ell - 1)) {
    restore(best);
    return true;
  }
  restore(best);
  VertexSet nb;
  for (int w : g.adj[best])
    if (alive[w]) nb.push_back(w);
  for (int w : nb) remove(w);
  bool ok = vc_branch(g, alive, deg, ell - static_cast<int>(nb.size()));
  for (auto it = nb.rbegin(); it != nb.rend(); ++it) restore(*it);
  return ok;
}

}  // namespace

bool solve_vc_exact(const Graph& g, int ell, int cap) {
  if (g.n > cap)
    throw cap_error("solve_vc_exact: " + std::to_string(g.n) +
                    " vertices exceeds cap " + std::to_string(cap));
  if (ell < 0) return false;
  std::vector<char> alive(g.n, 1);
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  return vc_branch(g, alive, deg, ell);
}

std::pair<bool, QueryRecord> vc_oracle(const Graph& g, int ell, int cap) {
  QueryRecord rec;
  rec.original_n = g.n;
  rec.budget = ell;
  auto [reduced, ell2] = reduce_vc(g, ell);
  rec.reduced_n = reduced.n;
  rec.answer = ell2 >= 0 && solve_vc_exact(reduced, ell2, cap);
  try {
    rec.fvs_of_query = static_cast<int>(fvs_exact(g).size());
  } catch (const cap_error&) {
    rec.fvs_of_query = -1;
  }
  return {rec.answer, rec};
}

}  // namespace fdel
