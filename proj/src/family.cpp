#include "fdel/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fdel/structure.hpp"

namespace fdel {

std::vector<Graph> strip_isolated(const std::vector<Graph>& members) {
  std::vector<Graph> out;
  for (const auto& g : members) {
    VertexSet keep = set_difference(full_vertex_set(g), isolated_vertices(g));
    out.push_back(induced_subgraph(g, keep).graph);
  }
  return out;
}

namespace {

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

std::optional<int> p3_free_witness(const std::vector<Graph>& stripped) {
  // P3-subgraph-free == maximum degree at most 1
  int best = -1;
  for (int i = 0; i < static_cast<int>(stripped.size()); ++i) {
    const Graph& g = stripped[i];
    if (max_degree(g) > 1) continue;
    if (best == -1 ||
        std::pair(g.edge_count(), g.n) <
            std::pair(stripped[best].edge_count(), stripped[best].n))
      best = i;
  }
  if (best == -1) return std::nullopt;
  return best;
}

int compute_alpha(const std::vector<Graph>& stripped, int m) {
  if (stripped.empty())
    throw std::invalid_argument("compute_alpha: empty family");
  if (m < 0) throw std::invalid_argument("compute_alpha: m < 0");
  int alpha = 0;
  for (const auto& h : stripped)
    alpha = std::max(alpha, h.n + 3 * m * (max_degree(h) + 1));
  return alpha;
}

int mintw(const std::vector<Graph>& members) {
  if (members.empty()) throw std::invalid_argument("mintw: empty family");
  int best = treewidth_exact(members[0]);
  for (const auto& g : members) best = std::min(best, treewidth_exact(g));
  return best;
}

Family Family::from_members(std::vector<Graph> members,
                            std::vector<std::string> names) {
  if (members.empty())
    throw std::invalid_argument("Family: at least one member required");
  Family f;
  f.members = std::move(members);
  if (names.empty())
    for (size_t i = 0; i < f.members.size(); ++i)
      names.push_back("F" + std::to_string(i + 1));
  if (names.size() != f.members.size())
    throw std::invalid_argument("Family: name/member count mismatch");
  f.names = std::move(names);

  f.stripped = strip_isolated(f.members);
  for (const auto& g : f.stripped)
    if (g.n == 0) f.has_empty_member = true;
  if (auto w = p3_free_witness(f.stripped)) {
    f.witness_index = *w;
    f.m = f.witness().edge_count() - 1;
    if (f.m >= 0) f.alpha = compute_alpha(f.stripped, f.m);
  }
  f.min_treewidth = mintw(f.members);
  f.guard_bound = 0;
  for (const auto& g : f.members)
    f.guard_bound = std::max(f.guard_bound, g.n + 2 * g.n * g.n * g.n);
  return f;
}

bool Family::swapped() const {
  for (size_t i = 0; i < members.size(); ++i)
    if (stripped[i].n != members[i].n) return true;
  return false;
}

namespace {

bool strictly_below_cw(const Graph& a, const Graph& b) {
  // a below b and not equivalent under componentwise minors
  return componentwise_minor(a, b) && !componentwise_minor(b, a);
}

}  // namespace

ReductionTarget select_reduction_target(const Family& f) {
  for (const auto& g : f.members) {
    bool ok = false;
    for (const auto& comp : connected_components(g))
      if (comp.size() >= 3) ok = true;
    if (!ok)
      throw regime_error(
          "select_reduction_target: member without a component of >= 3 "
          "vertices (upper-bound regime)");
  }

  // minimal under componentwise minors within the whole family, restricted
  // to members of minimum treewidth
  std::vector<int> minimal;
  for (int i = 0; i < static_cast<int>(f.members.size()); ++i) {
    if (treewidth_exact(f.members[i]) != f.min_treewidth) continue;
    bool dominated = false;
    for (int j = 0; j < static_cast<int>(f.members.size()); ++j)
      if (j != i && strictly_below_cw(f.members[j], f.members[i]))
        dominated = true;
    if (!dominated) minimal.push_back(i);
  }

  ReductionTarget best;
  int best_slb = -1;
  for (int i : minimal) {
    const Graph& h = f.members[i];
    auto comps = connected_components(h);
    std::vector<Graph> comp_graphs;
    for (const auto& c : comps)
      comp_graphs.push_back(induced_subgraph(h, c).graph);
    for (const auto& c : comp_graphs) {
      bool maximal = true;
      for (const auto& d : comp_graphs)
        if (contains_minor(d, c) && !contains_minor(c, d)) maximal = false;
      if (!maximal || c.edge_count() == 0) continue;
      int s = slb(c);
      if (best_slb == -1 || s < best_slb) {
        best_slb = s;
        best.H = h;
        best.H_up = c;
      }
    }
  }
  best.c = 0;
  for (const auto& comp : connected_components(best.H))
    if (graph_isomorphic(induced_subgraph(best.H, comp).graph, best.H_up))
      ++best.c;
  return best;
}

Family read_family(std::istream& in) {
  std::vector<Graph> members;
  std::vector<std::string> names;
  std::string line, block;
  auto flush = [&] {
    if (names.empty()) return;
    if (names.size() > members.size()) {
      std::istringstream gs(block);
      members.push_back(read_graph(gs));
      if (members.back().n > kFamilyMemberCap)
        throw parse_error("family member '" + names.back() + "' has " +
                          std::to_string(members.back().n) +
                          " vertices; limit is " +
                          std::to_string(kFamilyMemberCap));
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "g") {
      flush();
      std::string name;
      ls >> name;
      if (name.empty()) throw parse_error("family: 'g' line without a name");
      names.push_back(name);
    } else {
      if (!tok.empty() && names.empty())
        throw parse_error("family: content before the first 'g' line");
      block += line;
      block += '\n';
    }
  }
  flush();
  if (members.empty()) throw parse_error("family: no members");
  return Family::from_members(std::move(members), std::move(names));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open family file: " + path);
  return read_family(in);
}

}  // namespace fdel
