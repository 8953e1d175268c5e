#include <doctest.h>

#include "elimtree/families.hpp"
#include "elimtree/insertion.hpp"
#include "elimtree/rotation.hpp"
#include "elimtree/verification.hpp"
#include "support/graph_zoo.hpp"

using namespace elimtree;

TEST_CASE("format_step") {
  CHECK(format_step({4, Direction::up}) == "4↑");
  CHECK(format_step({3, Direction::down}) == "3↓");
}

TEST_CASE("generic rotation on small examples") {
  Graph edge(2);
  edge.add_edge(1, 2);
  CHECK(canonical_key(rotate_edge_generic(edge, forest_from_key("0 1"), 1, 2)) == "2 0");
  CHECK_THROWS_AS(rotate_edge_generic(edge, forest_from_key("0 1"), 2, 1), ForestError);

  // Up-rotating 4 in the chain 1-2-3-4 of the 4-cycle.
  const Graph c4 = cycle_graph(4);
  const ElimForest t1 = rotate_edge_generic(c4, forest_from_key("0 1 2 3"), 3, 4);
  CHECK(validate(c4, t1));
  CHECK(t1.parent(3) == 4);
  CHECK(t1.parent(4) == 2);
}

TEST_CASE("generic rotation is an involution and stays valid") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::isomorphism_representatives(testing::all_labelled_graphs(n)))
      for (const auto& f : enumerate_all(g))
        for (Vertex j = 1; j <= n; ++j) {
          const Vertex i = f.parent(j);
          if (i == 0) continue;
          const ElimForest r = rotate_edge_generic(g, f, i, j);
          CHECK(validate(g, r));
          CHECK(r.parent(i) == j);
          CHECK(rotate_edge_generic(g, r, j, i) == f);
        }
}

TEST_CASE("fast rotations agree with the generic rule in clean configurations") {
  std::size_t compared = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : testing::all_identity_peo_graphs(n)) {
      const PeoGraph pg(g);
      for (const auto& f : enumerate_all(g))
        for (Vertex j = 1; j <= n; ++j) {
          if (!is_clean_for(f, j)) continue;
          if (const Vertex i = f.parent(j); i != 0 && i < j) {
            CHECK(rotate_fast(pg, f, j, Direction::up) == rotate_edge_generic(g, f, i, j));
            ++compared;
          } else if (i > j) {
            CHECK_THROWS_AS(rotate_fast(pg, f, j, Direction::up), ForestError);
          }
          if (const Vertex c = f.smaller_child(j); c != 0) {
            CHECK(rotate_fast(pg, f, j, Direction::down) == rotate_edge_generic(g, f, j, c));
            ++compared;
          } else {
            CHECK_THROWS_AS(rotate_fast(pg, f, j, Direction::down), ForestError);
          }
        }
    }
  CHECK(compared > 100000);
}

TEST_CASE("complete graph rotations are adjacent transpositions") {
  const PeoGraph pg(complete_graph(5));
  for (const auto& f : enumerate_all(pg.graph()))
    for (Vertex j = 1; j <= 5; ++j) {
      if (f.is_root(j) || f.parent(j) > j || !is_clean_for(f, j)) continue;
      const auto before = sigma_encode(pg, f);
      const auto after = sigma_encode(pg, rotate_fast(pg, f, j, Direction::up));
      int differences = 0;
      std::size_t at = 0;
      for (std::size_t k = 0; k < before.size(); ++k)
        if (before[k] != after[k]) {
          ++differences;
          at = k;
        }
      CHECK(differences == 2);
      CHECK(before[at - 1] == after[at]);
    }
}
