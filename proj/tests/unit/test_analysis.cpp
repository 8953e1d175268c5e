#include <doctest.h>

#include "elimtree/analysis.hpp"
#include "elimtree/families.hpp"
#include "elimtree/generate.hpp"
#include "elimtree/verification.hpp"
#include "support/graph_zoo.hpp"

using namespace elimtree;

namespace {

bool observed_cyclic(const PeoGraph& pg) {
  const auto seq = generate_list(pg);
  return seq.size() >= 2 && are_rotation_adjacent(pg.graph(), seq.front(), seq.back());
}

Graph triangle_with_tail(int tail) {
  Graph g(3 + tail);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  for (int k = 0; k < tail; ++k) g.add_edge(3 + k, 4 + k);
  return g;
}

}  // namespace

TEST_CASE("counts") {
  CHECK(count_forests(path_graph(3)) == 5);
  CHECK(count_forests(cycle_graph(4)) == 20);
  CHECK(count_forests(star_graph(4)) == 16);
  CHECK(count_forests(Graph(0)) == 1);
  CHECK(count_forests(matching_graph(3)) == 8);
  CHECK(count_forests(complete_graph(20)) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(count_forests(path_graph(63)), SizeLimitError);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::all_labelled_graphs(n)) CHECK(count_forests(g) == enumerate_all(g).size());
}

TEST_CASE("prefix parities") {
  for (const auto& p : prefix_parities(PeoGraph(complete_graph(5)))) CHECK(p.even);
  const auto path = prefix_parities(PeoGraph(path_graph(4)));
  REQUIRE(path.size() == 2);
  CHECK(path[0].nu == 2);
  CHECK(path[0].count == 2);
  CHECK(path[0].even);
  CHECK(path[1].count == 5);
  CHECK_FALSE(path[1].even);
  const auto matching = prefix_parities(PeoGraph(matching_graph(2)));
  REQUIRE(!matching.empty());
  CHECK(matching[0].count == 1);
  CHECK_FALSE(matching[0].even);
}

TEST_CASE("cyclicity verdicts on the four small examples") {
  CHECK(predict_cyclic(PeoGraph(complete_graph(4))).cyclic);
  CHECK(predict_cyclic(PeoGraph(matching_graph(2))).cyclic);
  CHECK_FALSE(predict_cyclic(PeoGraph(path_graph(4))).cyclic);
  CHECK_FALSE(predict_cyclic(PeoGraph(star_graph(4))).cyclic);
  CHECK_FALSE(predict_cyclic(PeoGraph(Graph(3))).cyclic);

  Graph diamond(4);
  for (const auto& [u, v] : std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}) diamond.add_edge(u, v);
  const auto verdict = predict_cyclic(PeoGraph(diamond));
  CHECK(verdict.cyclic);
  CHECK(std::find(verdict.reasons.begin(), verdict.reasons.end(), "2-connected") != verdict.reasons.end());
}

TEST_CASE("predictions match the generated sequences") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::all_identity_peo_graphs(n)) {
      const PeoGraph pg(g);
      CHECK(predict_cyclic(pg).cyclic == observed_cyclic(pg));
    }
}

TEST_CASE("choosing a cyclic PEO") {
  for (int tail = 1; tail <= 3; ++tail) {
    const Graph g = triangle_with_tail(tail);
    const auto found = choose_cyclic_peo(g);
    REQUIRE(found);
    const PeoGraph pg = relabel_to_peo(g, found->order);
    CHECK(predict_cyclic(pg).cyclic);
    CHECK(observed_cyclic(pg));
  }

  Graph with_edge(5);  // path 1-2-3 plus the isolated edge {4,5}
  with_edge.add_edge(1, 2);
  with_edge.add_edge(2, 3);
  with_edge.add_edge(4, 5);
  const auto found = choose_cyclic_peo(with_edge);
  REQUIRE(found);
  CHECK(found->rule == "isolated-edge");
  CHECK(observed_cyclic(relabel_to_peo(with_edge, found->order)));

  for (int n = 4; n <= 6; ++n) CHECK_FALSE(choose_cyclic_peo(path_graph(n)));
  CHECK_FALSE(choose_cyclic_peo(star_graph(5)));
  CHECK_THROWS_AS(choose_cyclic_peo(cycle_graph(4)), NotPeoError);
}

TEST_CASE("a found ordering is always cyclic and absence is exhaustive for small graphs") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::isomorphism_representatives(testing::all_identity_peo_graphs(n))) {
      const auto found = choose_cyclic_peo(g);
      bool any = false;
      for (const auto& order : testing::all_peos(g)) any = any || predict_cyclic(relabel_to_peo(g, order)).cyclic;
      CHECK(found.has_value() == any);
      if (found) CHECK(observed_cyclic(relabel_to_peo(g, found->order)));
    }
}
