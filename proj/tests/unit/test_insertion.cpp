#include <doctest.h>

#include <numeric>
#include <set>

#include "elimtree/families.hpp"
#include "elimtree/insertion.hpp"
#include "elimtree/rotation.hpp"
#include "elimtree/verification.hpp"
#include "support/graph_zoo.hpp"

using namespace elimtree;
using testing::join;

namespace {

// Seven-vertex chordal graph whose vertex 7 has the neighbours 2 and 3.
Graph seven_vertex_example() {
  Graph g(7);
  for (const auto& [u, v] : std::vector<Edge>{{6, 2}, {1, 2}, {2, 3}, {2, 7}, {7, 3}, {3, 4}, {3, 5}}) g.add_edge(u, v);
  return g;
}

ElimForest seven_vertex_tree() { return ElimForest::from_parents(std::vector<Vertex>{0, 2, 7, 5, 3, 0, 2, 3}); }

}  // namespace

TEST_CASE("sigma of the seven-vertex tree and its deletion chain") {
  const Graph g = seven_vertex_example();
  const PeoGraph pg(g);
  ElimForest t = seven_vertex_tree();
  REQUIRE(validate(g, t));
  CHECK(join(sigma_encode(pg, t)) == "5372146");
  const std::vector<std::string> chain{"532146", "53214", "3214", "321"};
  for (const auto& expected : chain) {
    t = delete_max(pg, t);
    CHECK(join(sigma_encode(pg, t)) == expected);
  }
}

TEST_CASE("insertion path and sibling forests") {
  const Graph g = seven_vertex_example();
  const PeoGraph pg(g);
  const ElimForest base = delete_max(pg, seven_vertex_tree());
  const auto path = insertion_path(pg, base);
  CHECK(path == std::vector<Vertex>{5, 3, 2});
  const std::vector<std::string> expected{"7532146", "5732146", "5372146", "5321467"};
  for (int i = 1; i <= 4; ++i) CHECK(join(sigma_encode(pg, insert_at(pg, base, i))) == expected[static_cast<std::size_t>(i - 1)]);
  // Neighbouring sibling forests differ by rotating {x_i, 7}.
  CHECK(rotate_edge_generic(g, insert_at(pg, base, 3), 7, 2) == insert_at(pg, base, 4));
  CHECK(rotate_edge_generic(g, insert_at(pg, base, 1), 7, 5) == insert_at(pg, base, 2));
  // First: 7 becomes the root; last: 7 is a leaf under x_lambda.
  CHECK(insert_at(pg, base, 1).is_root(7));
  CHECK(insert_at(pg, base, 4).parent(7) == 2);
  CHECK(insert_at(pg, base, 4).is_leaf(7));
  CHECK_THROWS_AS(insert_at(pg, base, 5), ForestError);
}

TEST_CASE("insertion path on cliques and stars") {
  const PeoGraph k5(complete_graph(5));
  const ElimForest chain = initial_forest(PeoGraph(complete_graph(4)));
  CHECK(insertion_path(k5, chain) == std::vector<Vertex>{1, 2, 3, 4});

  const PeoGraph star(star_graph(6));
  // Broom on Star_5: handle 3, 4, then the centre with leaves 2 and 5.
  const ElimForest broom = forest_from_ordering(star_graph(5), std::vector<Vertex>{3, 4, 1, 2, 5});
  CHECK(insertion_path(star, broom) == std::vector<Vertex>{3, 4, 1});
}

TEST_CASE("delete_max edge cases") {
  const PeoGraph one(Graph(1));
  CHECK(delete_max(one, ElimForest(1)).size() == 0);
  Graph with_isolated(3);
  with_isolated.add_edge(1, 2);
  const PeoGraph pg(with_isolated);
  CHECK(canonical_key(delete_max(pg, forest_from_key("0 1 0"))) == "0 1");
  const PeoGraph star(star_graph(3));
  CHECK(canonical_key(delete_max(star, forest_from_key("0 1 1"))) == "0 1");
  CHECK(canonical_key(delete_max(star, forest_from_key("3 1 0"))) == "0 1");
  CHECK_THROWS_AS(delete_max(star, forest_from_key("3 3 0")), ForestError);
}

TEST_CASE("deletion inverts insertion and insertions cover each level") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::all_identity_peo_graphs(n)) {
      const PeoGraph pg(g);
      std::set<std::string> produced;
      for (const auto& f : enumerate_all(g.prefix(n - 1))) {
        const auto lambda = static_cast<int>(insertion_path(pg, f).size());
        for (int i = 1; i <= lambda + 1; ++i) {
          const ElimForest c = insert_at(pg, f, i);
          CHECK(validate(g, c));
          CHECK(delete_max(pg, c) == f);
          produced.insert(canonical_key(c));
        }
      }
      CHECK(produced.size() == enumerate_all(g).size());
    }
}

TEST_CASE("sigma encoding") {
  CHECK(join(sigma_encode(PeoGraph(star_graph(9)), forest_from_ordering(star_graph(9), std::vector<Vertex>{3, 6, 7, 1, 2, 4, 5, 8, 9}))) ==
        "367124589");
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::all_identity_peo_graphs(n)) {
      const PeoGraph pg(g);
      std::vector<Vertex> identity(static_cast<std::size_t>(n));
      std::iota(identity.begin(), identity.end(), 1);
      CHECK(sigma_encode(pg, initial_forest(pg)) == identity);
      std::set<std::vector<Vertex>> images;
      for (const auto& f : enumerate_all(g)) {
        const auto perm = sigma_encode(pg, f);
        CHECK(forest_from_ordering(g, perm) == f);
        CHECK(sigma_decode(pg, perm) == f);
        images.insert(perm);
      }
      CHECK(images.size() == enumerate_all(g).size());
    }
}
