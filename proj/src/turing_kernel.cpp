#include "fdel/turing_kernel.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <ostream>
#include <unordered_map>

namespace fdel {

VertexSet TypeFunction::image() const {
  VertexSet out;
  for (const auto& [y, fy] : assignment) out = set_union(out, fy);
  return out;
}

const VertexSet* TypeFunction::at(const VertexSet& y) const {
  for (const auto& [key, fy] : assignment)
    if (key == y) return &fy;
  return nullptr;
}

bool valid_type_function(const Graph& g, const VertexSet& u,
                         const VertexSet& q, const TypeFunction& f, int alpha) {
  for (const auto& [y, fy] : f.assignment) {
    if (set_intersection(y, u) != y) return false;
    if (static_cast<int>(fy.size()) > alpha) return false;
    for (int v : fy) {
      if (!set_contains(q, v)) return false;
      if (set_intersection(
              VertexSet(g.adj[v].begin(), g.adj[v].end()), u) != y)
        return false;
    }
  }
  // duplicate class keys
  for (size_t i = 0; i < f.assignment.size(); ++i)
    for (size_t j = i + 1; j < f.assignment.size(); ++j)
      if (f.assignment[i].first == f.assignment[j].first) return false;
  // image independent
  VertexSet img = f.image();
  for (int v : img)
    for (int w : g.adj[v])
      if (set_contains(img, w)) return false;
  return true;
}

VertexSet compute_Q(const Graph& g, const VertexSet& u, const VertexSet& r) {
  if (!set_intersection(u, r).empty())
    throw std::invalid_argument("compute_Q: U and R intersect");
  VertexSet blocked = set_union(set_union(u, r), neighborhood(g, r));
  return set_difference(full_vertex_set(g), blocked);
}

VertexSet compute_Qprime(const Graph& g, const VertexSet& u, const VertexSet& q,
                         const TypeFunction& f, int alpha) {
  VertexSet img = f.image();
  VertexSet out;
  for (int v : q) {
    if (set_contains(img, v)) continue;
    VertexSet y = set_intersection(
        VertexSet(g.adj[v].begin(), g.adj[v].end()), u);
    const VertexSet* fy = f.at(y);
    int size = fy ? static_cast<int>(fy->size()) : 0;
    if (size < alpha) out.push_back(v);
  }
  return out;
}

namespace {

// Witness vertices of the first contained member within G[alive], in host
// ids; empty optional if none contained.
std::optional<VertexSet> find_witness(const Graph& g, const VertexSet& alive,
                                      const std::vector<Graph>& members,
                                      ContainType type, int pattern_cap) {
  auto sub = induced_subgraph(g, alive);
  for (const auto& h : members) {
    VertexSet local;
    if (type == ContainType::subgraph) {
      auto map = contains_subgraph(sub.graph, h, pattern_cap);
      if (!map) continue;
      local.assign(map->begin(), map->end());
    } else {
      auto model = contains_minor(sub.graph, h, pattern_cap);
      if (!model) continue;
      for (const auto& bs : model->branch_sets)
        for (int v : bs) local.push_back(v);
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    VertexSet host;
    for (int v : local) host.push_back(sub.old_of_new[v]);
    std::sort(host.begin(), host.end());
    return host;
  }
  return std::nullopt;
}

struct BruteSearch {
  const Graph& g;
  const std::vector<Graph>& members;
  ContainType type;
  int pattern_cap;
  // alive-set mask -> largest budget already proven infeasible
  std::unordered_map<std::uint64_t, int> failed;
  VertexSet deleted;

  std::uint64_t mask_of(const VertexSet& alive) const {
    std::uint64_t m = 0;
    for (int v : alive) m |= std::uint64_t{1} << v;
    return m;
  }

  bool search(const VertexSet& alive, int budget) {
    std::uint64_t key = mask_of(alive);
    auto it = failed.find(key);
    if (it != failed.end() && it->second >= budget) return false;
    auto w = find_witness(g, alive, members, type, pattern_cap);
    if (!w) return true;
    if (budget > 0 && !w->empty()) {
      for (int v : *w) {
        deleted.push_back(v);
        if (search(set_difference(alive, {v}), budget - 1)) return true;
        deleted.pop_back();
      }
    }
    auto [pos, inserted] = failed.try_emplace(key, budget);
    if (!inserted) pos->second = std::max(pos->second, budget);
    return false;
  }
};

}  // namespace

std::optional<VertexSet> brute_force_delete(const Graph& g,
                                            const std::vector<Graph>& members,
                                            ContainType type, int ell, int cap,
                                            int pattern_cap) {
  if (ell < 0) throw std::invalid_argument("brute_force_delete: ell < 0");
  if (g.n > 64) throw cap_error("brute_force_delete: more than 64 vertices");
  ell = std::min(ell, g.n);
  if (std::min(ell, g.n - ell) > cap)
    throw cap_error("brute_force_delete: min(ell, n-ell) = " +
                    std::to_string(std::min(ell, g.n - ell)) +
                    " exceeds cap " + std::to_string(cap));
  BruteSearch bs{g, members, type, pattern_cap, {}, {}};
  VertexSet all = full_vertex_set(g);
  for (int b = 0; b <= ell; ++b) {
    bs.deleted.clear();
    if (bs.search(all, b)) {
      VertexSet x = bs.deleted;
      std::sort(x.begin(), x.end());
      return x;
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> brute_force_delete(const Graph& g, const Family& family,
                                            ContainType type, int ell, int cap,
                                            int pattern_cap) {
  return brute_force_delete(g, family.members, type, ell, cap, pattern_cap);
}

namespace {

void subsets_upto(const VertexSet& pool, int max_size,
                  const std::function<void(const VertexSet&)>& fn) {
  VertexSet cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    fn(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (size_t j = i; j < pool.size(); ++j) {
      cur.push_back(pool[j]);
      rec(j + 1);
      cur.pop_back();
    }
  };
  if (max_size >= 0) rec(0);
}

// Minimum vertex cover witness within ell, or absent. Debug-path helper.
std::optional<VertexSet> vc_witness(const Graph& g, int ell) {
  if (ell < 0) return std::nullopt;
  std::pair<int, int> edge{-1, -1};
  for (auto [u, v] : g.edges) {
    edge = {u, v};
    break;
  }
  if (edge.first == -1) return VertexSet{};
  for (int pick : {edge.first, edge.second}) {
    auto rest = induced_subgraph(g, complement_set(g, {pick}));
    if (auto sub = vc_witness(rest.graph, ell - 1)) {
      VertexSet out = {pick};
      for (int v : *sub) out.push_back(rest.old_of_new[v]);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

SolveResult solve(const DeletionInstance& instance, const SolveOptions& opts) {
  const Graph& g = instance.graph;
  const Family& fam = instance.family;
  int ell = instance.ell;
  if (ell < 0) throw std::invalid_argument("solve: ell < 0");
  ell = std::min(ell, g.n);

  SolveResult res;

  // small instances of families with isolated vertices: the strip below
  // would not be answer-preserving, fall back to brute force
  if (fam.swapped() && g.n - ell <= fam.guard_bound) {
    res.engine = "brute";
    res.witness = brute_force_delete(g, fam.members, instance.type, ell,
                                     opts.brute_cap, opts.pattern_cap);
    res.yes = res.witness.has_value();
    return res;
  }

  res.engine = "turing";
  if (fam.has_empty_member) {
    // the empty graph is contained in everything
    res.yes = false;
    return res;
  }
  if (fam.witness_index == -1)
    throw regime_error(
        "solve: family has no P3-subgraph-free member (lower-bound regime)");

  const std::vector<Graph>& members = fam.stripped;
  const int m = fam.m;
  const int alpha = fam.alpha;
  const VertexSet all = full_vertex_set(g);

  std::unordered_map<std::uint64_t, bool> free_memo;
  auto mask_of = [](const VertexSet& s) {
    std::uint64_t m2 = 0;
    for (int v : s) m2 |= std::uint64_t{1} << v;
    return m2;
  };
  auto is_free = [&](const VertexSet& s) {
    std::uint64_t key = mask_of(s);
    auto it = free_memo.find(key);
    if (it != free_memo.end()) return it->second;
    bool ok = is_type_free(induced_subgraph(g, s).graph, members,
                           instance.type, opts.pattern_cap);
    free_memo.emplace(key, ok);
    return ok;
  };

  bool yes = false;
  subsets_upto(all, m, [&](const VertexSet& u) {
    if (yes) return;
    VertexSet rest = set_difference(all, u);
    int rmax = 3 * (m - static_cast<int>(u.size()));
    subsets_upto(rest, rmax, [&](const VertexSet& r) {
      if (yes) return;
      auto comps = connected_components(induced_subgraph(g, r).graph);
      int odd = 0;
      for (const auto& c : comps) {
        if (c.size() % 2 == 0 || c.size() < 3) return;
        ++odd;
      }
      if (static_cast<int>(u.size()) +
              (static_cast<int>(r.size()) - odd) / 2 > m)
        return;

      VertexSet q = compute_Q(g, u, r);
      VertexSet nr_minus_u = set_difference(neighborhood(g, r), u);
      int base_cost = static_cast<int>(nr_minus_u.size());

      // enumerate independent subsets of Q as images f(2^U)
      VertexSet img;
      std::function<void(size_t)> enum_f = [&](size_t i) {
        if (yes) return;
        // finalize the current image as a candidate f
        TypeFunction f;
        bool sizes_ok = true;
        {
          std::vector<std::pair<VertexSet, VertexSet>> classes;
          for (int v : img) {
            VertexSet y = set_intersection(
                VertexSet(g.adj[v].begin(), g.adj[v].end()), u);
            bool found = false;
            for (auto& [key, val] : classes)
              if (key == y) {
                val.push_back(v);
                found = true;
              }
            if (!found) classes.emplace_back(y, VertexSet{v});
          }
          for (auto& [key, val] : classes)
            if (static_cast<int>(val.size()) > alpha) sizes_ok = false;
          f.assignment = std::move(classes);
        }
        if (sizes_ok) {
          VertexSet checked = set_union(set_union(img, u), r);
          if (is_free(checked)) {
            // Q excludes N(R), so the image cannot touch R
            assert(set_intersection(neighborhood(g, img), r).empty());
            VertexSet qprime = compute_Qprime(g, u, q, f, alpha);
            int budget = ell - base_cost - static_cast<int>(qprime.size());
            if (budget >= 0) {
              VertexSet query_set = set_difference(q, qprime);
              Graph query = induced_subgraph(g, query_set).graph;
              auto [ans, rec] = vc_oracle(query, budget, opts.vc_cap);
              res.queries.push_back({query_set, rec});
              if (opts.query_log) *opts.query_log << rec.to_json() << "\n";
              if (ans) {
                if (opts.check_witnesses) {
                  auto [reduced, b2] = reduce_vc(query, budget);
                  (void)reduced;
                  (void)b2;
                  auto xvc = vc_witness(query, budget);
                  assert(xvc);
                  VertexSet x = set_union(set_union(*xvc, nr_minus_u), qprime);
                  assert(static_cast<int>(x.size()) <= ell);
                  VertexSet kept = set_difference(all, x);
                  assert(is_free(kept));
                }
                yes = true;
                return;
              }
            }
          }
        }
        for (size_t j = i; j < q.size(); ++j) {
          int v = q[j];
          bool indep = true;
          for (int w : g.adj[v])
            if (set_contains(img, w)) indep = false;
          if (!indep) continue;
          img.insert(std::lower_bound(img.begin(), img.end(), v), v);
          enum_f(j + 1);
          img.erase(std::lower_bound(img.begin(), img.end(), v));
          if (yes) return;
        }
      };
      enum_f(0);
    });
  });
  res.yes = yes;
  return res;
}

}  // namespace fdel
