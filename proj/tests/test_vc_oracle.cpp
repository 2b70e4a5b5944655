#include <doctest.h>

#include "fdel/minors.hpp"
#include "fdel/vc_oracle.hpp"
#include "oracles.hpp"

using namespace fdel;

TEST_CASE("reduce_vc examples") {
  auto k1_k3 = disjoint_union({empty_graph(1), complete_graph(3)}).graph;
  auto [g1, l1] = reduce_vc(k1_k3, 2);
  CHECK(graph_isomorphic(g1, complete_graph(3)));
  CHECK(l1 == 2);

  // a single edge is resolved outright by the degree-1 rule
  auto [g2, l2] = reduce_vc(path_graph(2), 1);
  CHECK(g2.n == 0);
  CHECK(l2 == 0);

  // K_{1,5}: high-degree rule fires first, leaves fall as isolated
  auto star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto [g3, l3] = reduce_vc(star, 1);
  CHECK(g3.n == 0);
  CHECK(l3 == 0);

  // matching bound flags infeasible budgets
  auto [g4, l4] = reduce_vc(disjoint_copies(3, complete_graph(3)), 2);
  CHECK(l4 == -1);

  CHECK_THROWS_AS(reduce_vc(path_graph(2), -1), std::invalid_argument);
}

TEST_CASE("exact cover decision examples") {
  CHECK(!solve_vc_exact(complete_graph(3), 1));
  CHECK(solve_vc_exact(complete_graph(3), 2));
  CHECK(solve_vc_exact(cycle_graph(4), 2));
  CHECK(!solve_vc_exact(cycle_graph(4), 1));
  CHECK(!solve_vc_exact(oracle::petersen(), 5));
  CHECK(solve_vc_exact(oracle::petersen(), 6));
  CHECK(solve_vc_exact(empty_graph(4), 0));
  CHECK_THROWS_AS(solve_vc_exact(empty_graph(41), 3), cap_error);
}

TEST_CASE("oracle examples and record shape") {
  auto [yes, rec] = vc_oracle(complete_graph(3), 2);
  CHECK(yes);
  CHECK(rec.original_n == 3);
  CHECK(rec.budget == 2);
  CHECK(rec.fvs_of_query == 1);
  CHECK(rec.to_json() ==
        "{\"original_n\":3,\"reduced_n\":3,\"budget\":2,"
        "\"fvs_of_query\":1,\"answer\":true}");

  CHECK(!vc_oracle(disjoint_copies(2, complete_graph(3)), 3).first);

  auto [empty_yes, empty_rec] = vc_oracle(empty_graph(3), 0);
  CHECK(empty_yes);
  CHECK(empty_rec.reduced_n == 0);
}

TEST_CASE("reduction preserves the answer on all graphs up to 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : oracle::graphs_up_to_iso(n, false)) {
      for (int ell = 0; ell <= n; ++ell) {
        bool truth = oracle::vc_exhaustive(g) <= ell;
        auto [reduced, ell2] = reduce_vc(g, ell);
        bool via_reduce = ell2 >= 0 && oracle::vc_exhaustive(reduced) <= ell2;
        CHECK(via_reduce == truth);
        CHECK(solve_vc_exact(g, ell) == truth);
        CHECK(vc_oracle(g, ell).first == truth);
      }
    }
  }
}

TEST_CASE("reduction never grows the instance") {
  std::mt19937 rng(7601);
  for (int it = 0; it < 300; ++it) {
    auto g = oracle::random_graph(9, 0.35, rng);
    for (int ell : {0, 2, 4}) {
      auto [reduced, ell2] = reduce_vc(g, ell);
      CHECK(reduced.n <= g.n);
      CHECK(ell2 <= ell);
      if (ell2 >= 0) CHECK(isolated_vertices(reduced).empty());
    }
  }
}
