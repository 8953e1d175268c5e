#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "elimtree/families.hpp"
#include "elimtree/graph.hpp"
#include "support/graph_zoo.hpp"

using namespace elimtree;

TEST_CASE("parse_graph reads edge lists") {
  const Graph c4 = parse_graph("4 4\n1 2\n2 3\n3 4\n4 1\n");
  CHECK(c4.size() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(4, 1));
  CHECK_FALSE(c4.adjacent(1, 3));

  const Graph single = parse_graph("1 0");
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);

  const Graph star = parse_graph("# star\n4 3\n1 2\n1 3\n1 4\n");
  CHECK(star == star_graph(4));
}

TEST_CASE("parse_graph rejects malformed input") {
  auto kind_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no exception");
    return ParseErrorKind::malformed;
  };
  CHECK(kind_of("3 1\n1 4\n") == ParseErrorKind::vertex_out_of_range);
  CHECK(kind_of("3 2\n1 2\n2 1\n") == ParseErrorKind::duplicate_edge);
  CHECK(kind_of("3 1\n2 2\n") == ParseErrorKind::self_loop);
  CHECK(kind_of("3 2\n1 2\n") == ParseErrorKind::malformed);
  CHECK(kind_of("x") == ParseErrorKind::malformed);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("adjacency lists and matrix agree") {
  for (const Graph& g : testing::all_labelled_graphs(4)) {
    for (Vertex u = 1; u <= 4; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      CHECK(std::is_sorted(g.neighbors(u).begin(), g.neighbors(u).end()));
      for (Vertex v = 1; v <= 4; ++v) {
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        const auto& nb = g.neighbors(u);
        CHECK(g.adjacent(u, v) == std::binary_search(nb.begin(), nb.end(), v));
      }
    }
  }
}

TEST_CASE("is_peo") {
  std::vector<Vertex> order(5);
  std::iota(order.begin(), order.end(), 1);
  do {
    CHECK(is_peo(complete_graph(5), order));
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Vertex> four{1, 2, 3, 4};
  do {
    CHECK_FALSE(is_peo(cycle_graph(4), four));
  } while (std::next_permutation(four.begin(), four.end()));

  const Graph p3 = path_graph(3);
  CHECK(is_peo(p3, std::vector<Vertex>{1, 2, 3}));
  // 1-3-2 with 3 in the middle
  Graph bent(3);
  bent.add_edge(1, 3);
  bent.add_edge(3, 2);
  CHECK_FALSE(is_peo(bent, std::vector<Vertex>{1, 2, 3}));
  CHECK(is_peo(bent, std::vector<Vertex>{1, 3, 2}));
}

TEST_CASE("Lex-BFS certifies chordality against an induced-cycle search") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testing::isomorphism_representatives(testing::all_labelled_graphs(n))) {
      const auto order = lex_bfs_order(g);
      CHECK(order.size() == static_cast<std::size_t>(n));
      const bool chordal = !testing::has_induced_long_cycle(g);
      CHECK(is_peo(g, order) == chordal);
      CHECK(chordal_peo(g).has_value() == chordal);
    }
  CHECK_FALSE(chordal_peo(cycle_graph(4)));
  CHECK_FALSE(chordal_peo(cycle_graph(5)));
  CHECK(chordal_peo(complete_graph(4)));
}

TEST_CASE("components and connectivity") {
  const auto blocks = connected_components(matching_graph(2));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<Vertex>{1, 3});
  CHECK(blocks[1] == std::vector<Vertex>{2, 4});
  CHECK(connected_components(Graph(3)).size() == 3);
  CHECK(connected_components(complete_graph(4)).size() == 1);

  CHECK(is_2_connected(complete_graph(3)));
  CHECK_FALSE(is_2_connected(path_graph(3)));
  Graph diamond = complete_graph(4);
  Graph k4_minus(4);
  for (const auto& [u, v] : diamond.edges())
    if (!(u == 1 && v == 4)) k4_minus.add_edge(u, v);
  CHECK(is_2_connected(k4_minus));

  CHECK(is_tree(star_graph(5)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(matching_graph(2)));
}

TEST_CASE("is_filled") {
  CHECK(is_filled(complete_graph(5)));
  CHECK_FALSE(is_filled(star_graph(4)));
  CHECK(is_filled(path_graph(3)));
}

TEST_CASE("max_star_sigma") {
  for (int n = 2; n <= 7; ++n) CHECK(max_star_sigma(complete_graph(n)).value == 1);
  for (int n = 3; n <= 7; ++n) CHECK(max_star_sigma(path_graph(n)).value == 2);
  for (int n = 2; n <= 7; ++n) CHECK(max_star_sigma(star_graph(n)).value == n - 1);
  CHECK(max_star_sigma(Graph(3)).value == 0);
  CHECK(max_star_sigma(cycle_graph(5)).value == 2);
}

TEST_CASE("prefix and relabelling") {
  const Graph p = path_graph(5);
  CHECK(p.prefix(3) == path_graph(3));
  const std::vector<Vertex> swap{0, 2, 1, 3};
  const Graph r = path_graph(3).relabeled(swap);
  CHECK(r.adjacent(2, 1));
  CHECK(r.adjacent(1, 3));
  CHECK_FALSE(r.adjacent(2, 3));
}
