#include <doctest.h>

#include <algorithm>
#include <set>

#include "elimtree/elim_forest.hpp"
#include "elimtree/families.hpp"
#include "elimtree/peo_graph.hpp"
#include "elimtree/verification.hpp"
#include "support/graph_zoo.hpp"

using namespace elimtree;

namespace {

ElimForest from(std::vector<Vertex> parents) {
  parents.insert(parents.begin(), 0);
  return ElimForest::from_parents(parents);
}

}  // namespace

TEST_CASE("sibling lists stay consistent under link and unlink") {
  ElimForest f(5);
  CHECK(f.roots().size() == 5);
  f.unlink(2);
  f.link(2, 1);
  f.unlink(3);
  f.link(3, 1);
  f.unlink(5);
  f.link(5, 3);
  CHECK(f.parent(2) == 1);
  CHECK(f.child_count(1) == 2);
  CHECK(f.smaller_child_count(3) == 0);
  CHECK(f.smaller_child_count(5) == 0);
  // Chain 3 -> 5 -> 1 -> 2.
  f.unlink(3);
  f.link(3, 0);
  f.unlink(1);
  f.link(1, 5);
  CHECK(f.smaller_child(5) == 1);
  CHECK(f.is_ancestor(5, 2));
  CHECK_FALSE(f.is_ancestor(2, 5));
  CHECK(f.subtree(5).size() == 3);
  auto roots = f.roots();
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Vertex>{3, 4});
  CHECK(canonical_key(f) == "5 1 0 0 3");
}

TEST_CASE("from_parents rejects cycles") {
  CHECK_THROWS_AS(from({2, 1}), ForestError);
  CHECK_THROWS_AS(from({1}), ForestError);
  CHECK_THROWS_AS(from({4}), ForestError);
}

TEST_CASE("forest_from_ordering") {
  CHECK(canonical_key(forest_from_ordering(complete_graph(3), std::vector<Vertex>{2, 1, 3})) == "2 0 1");
  const ElimForest broom =
      forest_from_ordering(star_graph(9), std::vector<Vertex>{3, 6, 7, 1, 2, 4, 5, 8, 9});
  CHECK(broom.is_root(3));
  CHECK(broom.parent(6) == 3);
  CHECK(broom.parent(7) == 6);
  CHECK(broom.parent(1) == 7);
  for (Vertex leaf : {2, 4, 5, 8, 9}) CHECK(broom.parent(leaf) == 1);
  // Different removal orders, same tree.
  const Graph p3 = path_graph(3);
  CHECK(canonical_key(forest_from_ordering(p3, std::vector<Vertex>{2, 1, 3})) ==
        canonical_key(forest_from_ordering(p3, std::vector<Vertex>{2, 3, 1})));
}

TEST_CASE("initial_forest") {
  CHECK(canonical_key(initial_forest(PeoGraph(complete_graph(4)))) == "0 1 2 3");
  CHECK(canonical_key(initial_forest(PeoGraph(star_graph(4)))) == "0 1 1 1");
  CHECK(canonical_key(initial_forest(PeoGraph(matching_graph(2)))) == "0 0 1 2");
}

TEST_CASE("validate") {
  CHECK_FALSE(validate(complete_graph(3), from({0, 1, 1})));
  CHECK(validate(path_graph(3), from({2, 0, 2})));
  CHECK_FALSE(validate(path_graph(3), from({0, 0, 2})));  // two roots for one component
  CHECK_FALSE(validate(matching_graph(2), from({0, 1, 1, 2})));
  for (const Graph& g : testing::isomorphism_representatives(testing::all_labelled_graphs(5))) {
    std::vector<Vertex> order{1, 2, 3, 4, 5};
    do {
      CHECK(validate(g, forest_from_ordering(g, order)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("canonical keys") {
  CHECK(canonical_key(from({0, 1, 2})) == "0 1 2");
  CHECK(forest_from_key("0 1 2") == from({0, 1, 2}));
  CHECK(forest_from_key(canonical_key(from({3, 0, 2, 3}))) == from({3, 0, 2, 3}));
  CHECK_THROWS_AS(forest_from_key("0 x"), ForestError);
  std::set<std::string> keys;
  for (const auto& f : enumerate_all(complete_graph(3))) keys.insert(canonical_key(f));
  CHECK(keys.size() == 6);
}

TEST_CASE("tubings") {
  CHECK(format_tubing(to_tubing(Graph(1), ElimForest(1))) == "{1}");
  Graph edge(2);
  edge.add_edge(1, 2);
  const auto chain = to_tubing(edge, from({0, 1}));
  CHECK(format_tubing(chain) == "{1,2} {2}");
  CHECK(is_valid_tubing(edge, chain));
  // Non-adjacent disjoint tubes are fine, adjacent ones are not.
  const Graph p3 = path_graph(3);
  CHECK(is_valid_tubing(p3, to_tubing(p3, from({2, 0, 2}))));
  CHECK_FALSE(is_valid_tubing(p3, {{1}, {2}, {1, 2, 3}}));
  CHECK_FALSE(is_valid_tubing(p3, {{1, 3}, {1, 2, 3}}));  // not connected
  for (const Graph& g : testing::isomorphism_representatives(testing::all_labelled_graphs(4)))
    for (const auto& f : enumerate_all(g)) CHECK(is_valid_tubing(g, to_tubing(g, f)));
}
