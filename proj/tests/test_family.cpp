#include <doctest.h>

#include <sstream>

#include "fdel/family.hpp"
#include "fdel/minors.hpp"
#include "fdel/structure.hpp"
#include "oracles.hpp"

using namespace fdel;

namespace {

Graph p2_k1() { return disjoint_union({path_graph(2), empty_graph(1)}).graph; }

}  // namespace

TEST_CASE("strip isolated vertices") {
  auto out = strip_isolated({p2_k1(), complete_graph(3)});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == path_graph(2));
  CHECK(out[1] == complete_graph(3));

  auto flagged = Family::from_members({empty_graph(2)});
  CHECK(flagged.stripped[0].n == 0);
  CHECK(flagged.has_empty_member);

  auto two_p2 = disjoint_copies(2, path_graph(2));
  CHECK(strip_isolated({two_p2})[0] == two_p2);
}

TEST_CASE("P3-free witness selection") {
  auto two_p2 = disjoint_copies(2, path_graph(2));
  auto w = p3_free_witness({two_p2, complete_graph(3)});
  REQUIRE(w);
  CHECK(*w == 0);

  auto single = p3_free_witness({path_graph(2)});
  REQUIRE(single);
  CHECK(*single == 0);

  CHECK(!p3_free_witness({complete_graph(3)}));

  // fewest edges wins; ties by fewest vertices, then input order
  auto fam = Family::from_members({two_p2, path_graph(2)});
  CHECK(fam.witness_index == 1);
  CHECK(fam.m == 0);
}

TEST_CASE("alpha computation") {
  auto two_p2 = disjoint_copies(2, path_graph(2));
  CHECK(compute_alpha({two_p2}, 1) == 10);
  CHECK(compute_alpha({path_graph(2)}, 0) == 2);
  CHECK(compute_alpha({two_p2, complete_graph(3)}, 1) == 12);
  CHECK_THROWS_AS(compute_alpha({}, 1), std::invalid_argument);
}

TEST_CASE("family constants") {
  auto fam = Family::from_members({disjoint_copies(2, path_graph(2))});
  CHECK(fam.m == 1);
  CHECK(fam.alpha == 10);
  CHECK(fam.min_treewidth == 1);
  CHECK(fam.guard_bound == 132);
  CHECK(!fam.swapped());

  auto guard = Family::from_members({p2_k1()});
  CHECK(guard.guard_bound == 57);
  CHECK(guard.swapped());

  CHECK(Family::from_members({path_graph(2)}).m == 0);
}

TEST_CASE("minimum treewidth over members") {
  CHECK(mintw({path_graph(3)}) == 1);
  CHECK(mintw({complete_graph(3), disjoint_copies(2, path_graph(2))}) == 1);
  CHECK(mintw({complete_graph(4)}) == 3);
}

TEST_CASE("reduction target selection") {
  auto single = select_reduction_target(Family::from_members({complete_graph(3)}));
  CHECK(graph_isomorphic(single.H, complete_graph(3)));
  CHECK(graph_isomorphic(single.H_up, complete_graph(3)));
  CHECK(single.c == 1);

  auto p3 = select_reduction_target(Family::from_members({path_graph(3)}));
  CHECK(graph_isomorphic(p3.H_up, path_graph(3)));
  CHECK(p3.c == 1);

  auto two_k3 = disjoint_copies(2, complete_graph(3));
  auto fam = Family::from_members({two_k3, cycle_graph(4)});
  auto t = select_reduction_target(fam);
  CHECK(graph_isomorphic(t.H, two_k3));
  CHECK(graph_isomorphic(t.H_up, complete_graph(3)));
  CHECK(t.c == 2);

  CHECK_THROWS_AS(
      select_reduction_target(Family::from_members({path_graph(2)})),
      regime_error);
}

TEST_CASE("family file parsing") {
  std::istringstream in(
      "g tri\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
      "g edge\np edge 2 1\ne 1 2\n");
  auto fam = read_family(in);
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.names == std::vector<std::string>{"tri", "edge"});
  CHECK(fam.members[0] == complete_graph(3));
  CHECK(fam.members[1] == path_graph(2));
  CHECK(fam.witness_index == 1);

  std::istringstream no_members("c nothing\n");
  CHECK_THROWS_AS(read_family(no_members), parse_error);

  // member size cap
  std::ostringstream big;
  big << "g big\np edge 11 0\n";
  std::istringstream big_in(big.str());
  CHECK_THROWS_AS(read_family(big_in), parse_error);
}

TEST_CASE("witness is a matching plus nothing") {
  // stripped P3-free members are disjoint unions of edges: check the shape
  // claim m+1 edges, 2(m+1) vertices on a few families
  for (const auto& members :
       {std::vector<Graph>{disjoint_copies(3, path_graph(2))},
        std::vector<Graph>{path_graph(2), complete_graph(3)}}) {
    auto fam = Family::from_members(members);
    REQUIRE(fam.witness_index != -1);
    const Graph& m = fam.witness();
    CHECK(m.edge_count() == fam.m + 1);
    CHECK(graph_isomorphic(m, disjoint_copies(fam.m + 1, path_graph(2))));
  }
}

TEST_CASE("guard bound formula on random members") {
  std::mt19937 rng(7501);
  for (int it = 0; it < 50; ++it) {
    auto g = oracle::random_graph(6, 0.3, rng);
    auto fam = Family::from_members({g});
    CHECK(fam.guard_bound == g.n + 2 * g.n * g.n * g.n);
  }
}
