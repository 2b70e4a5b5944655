#include <doctest.h>

#include <sstream>

#include "fdel/graph.hpp"
#include "fdel/minors.hpp"
#include "oracles.hpp"

using namespace fdel;

TEST_CASE("disjoint union basics") {
  auto k3 = complete_graph(3);
  auto un = disjoint_union({k3, k3});
  CHECK(un.graph.n == 6);
  CHECK(un.graph.edge_count() == 6);
  CHECK(connected_components(un.graph).size() == 2);
  CHECK(disjoint_union({}).graph.n == 0);

  auto p2 = path_graph(2);
  auto single = disjoint_union({p2});
  CHECK(single.graph == p2);
  CHECK(single.maps[0] == std::vector<int>{0, 1});
}

TEST_CASE("identify") {
  // joining the ends of two P2s gives a P3
  auto un = disjoint_union({path_graph(2), path_graph(2)});
  auto r = identify(un.graph, un.maps[0][1], un.maps[1][0]);
  CHECK(r.graph.n == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(graph_isomorphic(r.graph, path_graph(3)));

  // merging the ends of a P3 collapses the two edges into one
  auto ends = identify(path_graph(3), 0, 2);
  CHECK(ends.graph.n == 2);
  CHECK(ends.graph.edge_count() == 1);

  // merging opposite C4 vertices: 3 vertices, 2 edges
  auto c4 = identify(cycle_graph(4), 0, 2);
  CHECK(c4.graph.n == 3);
  CHECK(c4.graph.edge_count() == 2);

  CHECK_THROWS_AS(identify(path_graph(3), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(identify(path_graph(3), 0, 7), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  CHECK(graph_isomorphic(induced_subgraph(complete_graph(4), {0, 1, 2}).graph,
                         complete_graph(3)));
  CHECK(induced_subgraph(complete_graph(4), {}).graph.n == 0);
  CHECK(graph_isomorphic(induced_subgraph(cycle_graph(5), {0, 1, 2}).graph,
                         path_graph(3)));
  CHECK_THROWS_AS(induced_subgraph(path_graph(2), {0, 5}),
                  std::invalid_argument);
}

TEST_CASE("connected components") {
  auto comps = connected_components(disjoint_copies(2, complete_graph(3)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);

  CHECK(connected_components(empty_graph(0)).empty());

  auto mixed = disjoint_union({empty_graph(1), path_graph(2)});
  auto mc = connected_components(mixed.graph);
  REQUIRE(mc.size() == 2);
  CHECK(mc[0].size() == 1);
  CHECK(mc[1].size() == 2);
}

TEST_CASE("isolated vertices agree with singleton components") {
  std::mt19937 rng(7101);
  for (int it = 0; it < 200; ++it) {
    auto g = oracle::random_graph(6, 0.3, rng);
    VertexSet iso = isolated_vertices(g);
    VertexSet singles;
    for (const auto& c : connected_components(g))
      if (c.size() == 1 && g.degree(c[0]) == 0) singles.push_back(c[0]);
    CHECK(iso == singles);
  }
}

TEST_CASE("union components are the concatenation of the parts") {
  std::mt19937 rng(7102);
  for (int it = 0; it < 100; ++it) {
    auto a = oracle::random_graph(5, 0.4, rng);
    auto b = oracle::random_graph(4, 0.4, rng);
    auto un = disjoint_union({a, b});
    CHECK(connected_components(un.graph).size() ==
          connected_components(a).size() + connected_components(b).size());
  }
}

TEST_CASE("identify and induced_subgraph compose through relabel maps") {
  std::mt19937 rng(7103);
  for (int it = 0; it < 100; ++it) {
    auto g = oracle::random_graph(6, 0.5, rng);
    if (g.n < 2) continue;
    auto r = identify(g, 0, 1);
    // every original edge not between 0 and 1 must survive under the map
    for (auto [u, v] : g.edges) {
      if (r.map[u] == r.map[v]) continue;
      CHECK(r.graph.has_edge(r.map[u], r.map[v]));
    }
    // an induced subgraph keeps exactly the edges inside the kept set
    VertexSet keep = {0, 2, 4};
    auto ind = induced_subgraph(g, keep);
    for (auto [u, v] : ind.graph.edges)
      CHECK(g.has_edge(ind.old_of_new[u], ind.old_of_new[v]));
    int inside = 0;
    for (auto [u, v] : g.edges)
      if (set_contains(keep, u) && set_contains(keep, v)) ++inside;
    CHECK(ind.graph.edge_count() == inside);
  }
}

TEST_CASE("graph text format round trip") {
  auto g = oracle::petersen();
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  CHECK(read_graph(in) == g);

  std::istringstream bad1("p edge 2 1\ne 1 3\n");
  CHECK_THROWS_AS(read_graph(bad1), parse_error);
  std::istringstream bad2("e 1 2\n");
  CHECK_THROWS_AS(read_graph(bad2), parse_error);
  std::istringstream with_comment("c hello\np edge 2 1\ne 1 2\n");
  CHECK(read_graph(with_comment) == path_graph(2));
}
