#include "fdel/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fdel/minors.hpp"
#include "fdel/structure.hpp"

namespace fdel {

CnfFormula read_cnf(std::istream& in) {
  CnfFormula phi;
  int m = -1;
  std::string line;
  std::vector<int> clause;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      if (!(ls >> kind >> phi.k >> m) || kind != "cnf" || phi.k < 0 || m < 0)
        throw parse_error("cnf: malformed problem line");
      continue;
    }
    if (m < 0) throw parse_error("cnf: clause before problem line");
    ls.clear();
    ls.str(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (clause.empty()) throw parse_error("cnf: empty clause");
        phi.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      int var = std::abs(lit);
      if (var < 1 || var > phi.k)
        throw parse_error("cnf: variable " + std::to_string(var) +
                          " out of range");
      if (std::find(clause.begin(), clause.end(), lit) != clause.end())
        throw parse_error("cnf: duplicate literal in clause");
      clause.push_back(lit);
    }
  }
  if (!clause.empty()) throw parse_error("cnf: clause not terminated by 0");
  if (m != phi.m_clauses())
    throw parse_error("cnf: clause count mismatch: header says " +
                      std::to_string(m) + ", found " +
                      std::to_string(phi.m_clauses()));
  return phi;
}

CnfFormula read_cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open cnf file: " + path);
  return read_cnf(in);
}

namespace {

VertexSet apply_map(const VertexSet& s, const std::vector<int>& map) {
  VertexSet out;
  for (int v : s) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CopyLabels remap_copy(const CopyLabels& c, const std::vector<int>& map) {
  CopyLabels out;
  out.u = map[c.u];
  out.v = map[c.v];
  out.w = map[c.w];
  out.s = map[c.s];
  out.t = map[c.t];
  out.H1 = apply_map(c.H1, map);
  out.H2 = apply_map(c.H2, map);
  out.L3 = apply_map(c.L3, map);
  out.R1 = apply_map(c.R1, map);
  out.R2 = apply_map(c.R2, map);
  out.L1 = apply_map(c.L1, map);
  out.L2 = apply_map(c.L2, map);
  return out;
}

GadgetLabels remap_labels(const GadgetLabels& g, const std::vector<int>& map) {
  GadgetLabels out;
  for (const auto& c : g.copies) out.copies.push_back(remap_copy(c, map));
  for (int v : g.S) out.S.push_back(map[v]);
  return out;
}

// Graph under construction: disjoint union followed by a sequence of
// identifications, with a composed map from union ids to current ids.
struct Assembly {
  Graph graph;
  std::vector<int> cur;  // union id -> current id

  explicit Assembly(const Graph& start) : graph(start), cur(start.n) {
    std::iota(cur.begin(), cur.end(), 0);
  }

  void merge(int xu, int yu) {
    auto r = identify(graph, cur[xu], cur[yu]);
    graph = r.graph;
    for (int& t : cur) t = r.map[t];
  }
};

}  // namespace

std::pair<Graph, GadgetLabels> clause_gadget(const Graph& h, int n) {
  if (h.n < 3) throw std::invalid_argument("clause_gadget: |V(H)| < 3");
  if (!is_connected(h)) throw std::invalid_argument("clause_gadget: H not connected");
  if (n < 1) throw std::invalid_argument("clause_gadget: n < 1");

  auto dec = block_decomposition(h);
  VertexSet L;
  for (const auto& block : dec.leaf_blocks)
    if (L.empty() || block.size() < L.size()) L = block;
  VertexSet cuts_in_l = set_intersection(L, dec.cut_vertices);
  int c = cuts_in_l.empty() ? L[0] : cuts_in_l[0];
  int b = -1;
  for (int x : L)
    if (x != c) {
      b = x;
      break;
    }
  VertexSet non_cut_l = set_difference(L, dec.cut_vertices);
  VertexSet r_verts = set_difference(full_vertex_set(h), non_cut_l);
  int a = -1;
  for (int x : r_verts)
    if (x != b && x != c) {
      a = x;
      break;
    }
  if (a == -1)
    for (int x = 0; x < h.n; ++x)
      if (x != b && x != c) {
        a = x;
        break;
      }

  auto lg = induced_subgraph(h, L);

  // M = H1 + H2 + L3 with c1~b2 -> s and c2~c3 -> t
  auto un = disjoint_union({h, h, lg.graph});
  Assembly m_asm(un.graph);
  int c1 = un.maps[0][c], b2 = un.maps[1][b], c2 = un.maps[1][c];
  int c3 = un.maps[2][lg.new_of_old[c]], b3 = un.maps[2][lg.new_of_old[b]];
  m_asm.merge(c1, b2);
  m_asm.merge(c2, c3);

  CopyLabels base;
  base.u = m_asm.cur[un.maps[0][a]];
  base.w = m_asm.cur[un.maps[0][b]];
  base.v = m_asm.cur[b3];
  base.s = m_asm.cur[c1];
  base.t = m_asm.cur[c2];
  VertexSet h_all = full_vertex_set(h);
  base.H1 = apply_map(apply_map(h_all, un.maps[0]), m_asm.cur);
  base.H2 = apply_map(apply_map(h_all, un.maps[1]), m_asm.cur);
  base.L1 = apply_map(apply_map(L, un.maps[0]), m_asm.cur);
  base.L2 = apply_map(apply_map(L, un.maps[1]), m_asm.cur);
  base.R1 = apply_map(apply_map(r_verts, un.maps[0]), m_asm.cur);
  base.R2 = apply_map(apply_map(r_verts, un.maps[1]), m_asm.cur);
  base.L3 = apply_map(apply_map(full_vertex_set(lg.graph), un.maps[2]),
                      m_asm.cur);
  const Graph m_graph = m_asm.graph;

  // chain 2n-1 copies: f_i(w)~f_{n+i}(v) and f_{n+i}(w)~f_{i+1}(u)
  int copies = 2 * n - 1;
  auto un2 = disjoint_union(std::vector<Graph>(copies, m_graph));
  Assembly g_asm(un2.graph);
  for (int i = 1; i < n; ++i) {
    g_asm.merge(un2.maps[i - 1][base.w], un2.maps[n + i - 1][base.v]);
    g_asm.merge(un2.maps[n + i - 1][base.w], un2.maps[i][base.u]);
  }

  GadgetLabels labels;
  for (int j = 0; j < copies; ++j) {
    std::vector<int> full(m_graph.n);
    for (int x = 0; x < m_graph.n; ++x) full[x] = g_asm.cur[un2.maps[j][x]];
    labels.copies.push_back(remap_copy(base, full));
  }
  for (int i = 0; i < n; ++i) labels.S.push_back(labels.copies[i].v);
  assert(g_asm.graph.n == copies * m_graph.n - 2 * (n - 1));
  return {g_asm.graph, labels};
}

VertexSet clause_gadget_solution(const GadgetLabels& labels, int j) {
  int n = labels.n();
  if (j < 1 || j > n)
    throw std::invalid_argument("clause_gadget_solution: j out of range");
  auto cp = [&](int i) -> const CopyLabels& { return labels.copies[i - 1]; };
  VertexSet x;
  for (int i = 1; i < j; ++i) {
    x.push_back(cp(i).t);
    x.push_back(cp(i).w);
    x.push_back(cp(i + n).s);
  }
  x.push_back(cp(j).v);
  x.push_back(cp(j).s);
  for (int i = j + 1; i <= n; ++i) {
    x.push_back(cp(i).t);
    x.push_back(cp(i).u);
    x.push_back(cp(i + n - 1).t);
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  assert(static_cast<int>(x.size()) == 3 * n - 1);
  return x;
}

ReductionArtifact build_instance_connected(const Graph& h,
                                           const CnfFormula& phi) {
  if (h.n < 3 || !is_connected(h))
    throw std::invalid_argument(
        "build_instance_connected: H must be connected with >= 3 vertices");
  if (phi.clauses.empty())
    throw std::invalid_argument("build_instance_connected: formula has no clauses");
  const int k = phi.k, m = phi.m_clauses(), n = phi.n_literals();
  if (k < 1)
    throw std::invalid_argument("build_instance_connected: no variables");

  std::vector<Graph> parts(k, h);
  std::vector<GadgetLabels> gadget_labels;
  for (const auto& clause : phi.clauses) {
    auto [wg, wl] = clause_gadget(h, static_cast<int>(clause.size()));
    parts.push_back(wg);
    gadget_labels.push_back(std::move(wl));
  }
  auto un = disjoint_union(parts);
  Assembly g_asm(un.graph);

  // variable copy i uses vertices 0 and 1 as v_{x_i} and v_{not x_i}
  std::vector<int> v_pos(k), v_neg(k);
  for (int i = 0; i < k; ++i) {
    v_pos[i] = un.maps[i][0];
    v_neg[i] = un.maps[i][1];
  }
  for (int j = 0; j < m; ++j) {
    const auto& clause = phi.clauses[j];
    for (size_t t = 0; t < clause.size(); ++t) {
      int lit = clause[t];
      int var = std::abs(lit) - 1;
      int target = lit > 0 ? v_pos[var] : v_neg[var];
      int s_vertex = un.maps[k + j][gadget_labels[j].S[t]];
      g_asm.merge(s_vertex, target);
    }
  }

  ReductionArtifact art;
  art.graph = g_asm.graph;
  art.ell = k + 3 * n - 2 * m;
  for (int i = 0; i < k; ++i) {
    VariableLabels vl;
    vl.v_pos = g_asm.cur[v_pos[i]];
    vl.v_neg = g_asm.cur[v_neg[i]];
    vl.vertices = apply_map(apply_map(full_vertex_set(h), un.maps[i]), g_asm.cur);
    art.variable_labels.push_back(std::move(vl));
    art.modulator.push_back(g_asm.cur[v_pos[i]]);
    art.modulator.push_back(g_asm.cur[v_neg[i]]);
  }
  std::sort(art.modulator.begin(), art.modulator.end());
  for (int j = 0; j < m; ++j) {
    std::vector<int> full(parts[k + j].n);
    for (int x = 0; x < parts[k + j].n; ++x)
      full[x] = g_asm.cur[un.maps[k + j][x]];
    art.clause_labels.push_back(remap_labels(gadget_labels[j], full));
  }
  return art;
}

ReductionArtifact build_instance_family(const Family& f, const CnfFormula& phi) {
  ReductionTarget target = select_reduction_target(f);
  ReductionArtifact inner = build_instance_connected(target.H_up, phi);
  const int c = target.c;
  const int ell = (2 * c - 1) * inner.ell;

  // Y: vertices of the c components isomorphic to H_up
  VertexSet y;
  for (const auto& comp : connected_components(target.H))
    if (graph_isomorphic(induced_subgraph(target.H, comp).graph, target.H_up))
      y = set_union(y, comp);
  Graph h_minus_y =
      induced_subgraph(target.H, set_difference(full_vertex_set(target.H), y))
          .graph;
  Graph g2 = disjoint_copies(ell + 1, h_minus_y);

  std::vector<Graph> parts = {g2};
  for (int i = 0; i < 2 * c - 1; ++i) parts.push_back(inner.graph);
  auto un = disjoint_union(parts);

  ReductionArtifact art;
  art.graph = un.graph;
  art.ell = ell;
  for (int i = 1; i <= 2 * c - 1; ++i) {
    const auto& map = un.maps[i];
    for (int v : inner.modulator) art.modulator.push_back(map[v]);
    for (const auto& gl : inner.clause_labels)
      art.clause_labels.push_back(remap_labels(gl, map));
    for (const auto& vl : inner.variable_labels) {
      VariableLabels out;
      out.v_pos = map[vl.v_pos];
      out.v_neg = map[vl.v_neg];
      out.vertices = apply_map(vl.vertices, map);
      art.variable_labels.push_back(std::move(out));
    }
  }
  std::sort(art.modulator.begin(), art.modulator.end());
  return art;
}

VertexSet instance_solution(const ReductionArtifact& art, const CnfFormula& phi,
                            const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != phi.k)
    throw std::invalid_argument("instance_solution: assignment size != k");
  VertexSet x;
  for (size_t i = 0; i < art.variable_labels.size(); ++i) {
    const auto& vl = art.variable_labels[i];
    x.push_back(assignment[i % phi.k] ? vl.v_pos : vl.v_neg);
  }
  const int m = phi.m_clauses();
  for (size_t j = 0; j < art.clause_labels.size(); ++j) {
    const auto& clause = phi.clauses[j % m];
    int pick = -1;
    for (size_t t = 0; t < clause.size(); ++t) {
      int lit = clause[t];
      if (assignment[std::abs(lit) - 1] == (lit > 0)) {
        pick = static_cast<int>(t) + 1;
        break;
      }
    }
    if (pick == -1)
      throw std::invalid_argument(
          "instance_solution: assignment does not satisfy the formula");
    auto sol = clause_gadget_solution(art.clause_labels[j], pick);
    x.insert(x.end(), sol.begin(), sol.end());
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  assert(static_cast<int>(x.size()) == art.ell);
  return x;
}

bool GadgetReport::all_ok() const {
  if (!tw_ok || !packing_ok || !packing_minus_s_ok) return false;
  for (bool ok : solution_ok)
    if (!ok) return false;
  return true;
}

GadgetReport verify_gadget(const Graph& h, int n, int vertex_cap,
                           int occurrence_cap) {
  if (h.n > vertex_cap || n > occurrence_cap)
    throw cap_error("verify_gadget: size exceeds verification caps");
  auto [g, labels] = clause_gadget(h, n);
  GadgetReport rep;

  int tw_h = treewidth_exact(h);
  int tw_g = treewidth_exact(g, kVerifyTreewidthCap);
  rep.tw_ok = tw_g <= tw_h;
  if (!rep.tw_ok)
    rep.failures.push_back("tw(G) = " + std::to_string(tw_g) + " > tw(H) = " +
                           std::to_string(tw_h));

  rep.packing_ok = disjoint_packing_at_least(g, h, 3 * n - 1);
  if (!rep.packing_ok)
    rep.failures.push_back("no packing of " + std::to_string(3 * n - 1) +
                           " H-subgraphs in G");
  VertexSet s_sorted = labels.S;
  std::sort(s_sorted.begin(), s_sorted.end());
  Graph g_minus_s =
      induced_subgraph(g, set_difference(full_vertex_set(g), s_sorted)).graph;
  rep.packing_minus_s_ok =
      3 * n - 2 == 0 || disjoint_packing_at_least(g_minus_s, h, 3 * n - 2);
  if (!rep.packing_minus_s_ok)
    rep.failures.push_back("no packing of " + std::to_string(3 * n - 2) +
                           " H-subgraphs in G-S");

  int slb_h = slb(h);
  for (int j = 1; j <= n; ++j) {
    bool ok = true;
    auto fail = [&](const std::string& msg) {
      ok = false;
      rep.failures.push_back("j=" + std::to_string(j) + ": " + msg);
    };
    VertexSet x = clause_gadget_solution(labels, j);
    if (static_cast<int>(x.size()) != 3 * n - 1) fail("|X| != 3n-1");
    if (!set_contains(x, labels.S[j - 1])) fail("f_j(v) not in X");
    auto rem = induced_subgraph(g, set_difference(full_vertex_set(g), x));
    if (contains_minor(rem.graph, h)) fail("G-X contains an H-minor");
    auto pruned = alpha_prune(rem.graph, slb_h);
    if (!componentwise_minor(pruned.graph, h))
      fail("slb(H)-prune of G-X not componentwise below H");
    for (const auto& comp : connected_components(rem.graph)) {
      int s_count = 0;
      for (int v : comp)
        if (set_contains(s_sorted, rem.old_of_new[v])) ++s_count;
      if (s_count == 0) continue;
      if (s_count > 1) fail("component with more than one S-vertex");
      if (static_cast<int>(comp.size()) >= slb_h)
        fail("S-component with >= slb(H) vertices");
    }
    rep.solution_ok.push_back(ok);
  }
  return rep;
}

}  // namespace fdel
