#include <doctest.h>

#include "elimtree/encoders.hpp"
#include "elimtree/families.hpp"
#include "elimtree/generate.hpp"
#include "elimtree/insertion.hpp"
#include "elimtree/verification.hpp"
#include "support/graph_zoo.hpp"

using namespace elimtree;

TEST_CASE("enumerate_all") {
  CHECK(enumerate_all(complete_graph(3)).size() == 6);
  CHECK(enumerate_all(path_graph(4)).size() == 14);
  CHECK(enumerate_all(cycle_graph(4)).size() == 20);
  CHECK_THROWS_AS(enumerate_all(complete_graph(8), 1000), GuardExceeded);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::isomorphism_representatives(testing::all_labelled_graphs(n))) {
      std::set<std::string> keys;
      for (const auto& f : enumerate_all(g)) {
        CHECK(validate(g, f));
        keys.insert(canonical_key(f));
      }
      CHECK(keys == testing::forests_by_orderings(g));
    }
}

TEST_CASE("flip graphs are regular skeletons") {
  const FlipGraph perm = build_flip_graph(complete_graph(4));
  CHECK(perm.size() == 24);
  CHECK(perm.regular_degree() == 3);
  CHECK(perm.edge_count() == 36);
  const FlipGraph asso = build_flip_graph(path_graph(4));
  CHECK(asso.size() == 14);
  CHECK(asso.regular_degree() == 3);
  CHECK(build_flip_graph(matching_graph(2)).regular_degree() == 2);
  CHECK(build_flip_graph(Graph(2)).regular_degree() == 0);
}

TEST_CASE("verify_gray_code") {
  const PeoGraph k4(complete_graph(4));
  const auto report = verify_gray_code(k4.graph(), generate_list(k4));
  CHECK(report.passed());
  CHECK(report.cyclic);

  const PeoGraph p4(path_graph(4));
  const auto path = verify_gray_code(p4.graph(), generate_list(p4));
  CHECK(path.passed());
  CHECK_FALSE(path.cyclic);

  auto repeated = generate_list(k4);
  repeated[5] = repeated[3];
  const auto bad = verify_gray_code(k4.graph(), repeated);
  CHECK_FALSE(bad.distinct);
  CHECK_FALSE(bad.passed());

  auto truncated = generate_list(k4);
  truncated.pop_back();
  CHECK_FALSE(verify_gray_code(k4.graph(), truncated).complete);
}

TEST_CASE("minimal jumps reproduce the rotation Gray code") {
  const PeoGraph k4(complete_graph(4));
  std::vector<std::string> sjt;
  for (const auto& p : algorithm_j(k4)) sjt.push_back(testing::join(p));
  CHECK(sjt == gray_code(complete_graph(4)));
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::all_identity_peo_graphs(n)) {
      const PeoGraph pg(g);
      const auto jumps = algorithm_j(pg);
      const auto forests = generate_list(pg);
      REQUIRE(jumps.size() == forests.size());
      for (std::size_t k = 0; k < jumps.size(); ++k) CHECK(sigma_encode(pg, forests[k]) == jumps[k]);
    }
}

TEST_CASE("zigzag closure") {
  for (int n = 1; n <= 5; ++n) CHECK(check_zigzag_closure(PeoGraph(star_graph(n))));
  for (const Graph& g : testing::all_identity_peo_graphs(5)) CHECK(check_zigzag_closure(PeoGraph(g)));
  Graph isolated_last(4);
  isolated_last.add_edge(1, 2);
  isolated_last.add_edge(2, 3);
  const auto levels = zigzag_levels(PeoGraph(isolated_last));
  REQUIRE(!levels.empty());
  CHECK(levels.back().nu == 4);
  CHECK(levels.back().z2);
  CHECK(levels.back().ok());
}

TEST_CASE("jump and rotation edges correspond") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::isomorphism_representatives(testing::all_identity_peo_graphs(n)))
      CHECK(check_jump_rotation_correspondence(PeoGraph(g)));
}

TEST_CASE("Hamilton cycle search") {
  const FlipGraph fg = build_flip_graph(cycle_graph(4));
  const auto result = find_hamilton_cycle(fg);
  REQUIRE(result.outcome == SearchOutcome::found);
  REQUIRE(result.cycle.size() == fg.size());
  std::set<std::size_t> distinct(result.cycle.begin(), result.cycle.end());
  CHECK(distinct.size() == fg.size());
  for (std::size_t k = 0; k < result.cycle.size(); ++k)
    CHECK(fg.adjacent(result.cycle[k], result.cycle[(k + 1) % result.cycle.size()]));

  Graph edge(2);
  edge.add_edge(1, 2);
  CHECK(find_hamilton_cycle(build_flip_graph(edge)).outcome == SearchOutcome::not_found);
  CHECK(find_hamilton_cycle(build_flip_graph(path_graph(5)), 10).outcome == SearchOutcome::inconclusive);
}

TEST_CASE("DOT export") {
  const Graph g = path_graph(3);
  const FlipGraph fg = build_flip_graph(g);
  std::vector<std::string> path;
  for (const auto& f : generate_list(PeoGraph(g))) path.push_back(canonical_key(f));
  const std::string dot = flip_graph_dot(fg, {}, path);
  CHECK(dot.rfind("graph flip {", 0) == 0);
  std::size_t bold = 0;
  for (std::size_t at = dot.find("style=bold"); at != std::string::npos; at = dot.find("style=bold", at + 1)) ++bold;
  CHECK(bold == 4);
  std::size_t edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  CHECK(edges == fg.edge_count());
}
