#include <doctest.h>

#include <set>

#include "elimtree/encoders.hpp"
#include "elimtree/families.hpp"
#include "elimtree/generate.hpp"
#include "elimtree/verification.hpp"

using namespace elimtree;

namespace {

int differing_positions(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) d += a[k] != b[k] ? 1 : 0;
  return d + static_cast<int>(std::max(a.size(), b.size()) - std::min(a.size(), b.size()));
}

}  // namespace

TEST_CASE("shape detection") {
  CHECK(detect_shape(complete_graph(5)).shape == Shape::complete);
  CHECK(detect_shape(star_graph(4)).shape == Shape::star);
  CHECK(detect_shape(path_graph(5)).shape == Shape::path);
  const auto matching = detect_shape(matching_graph(2));
  CHECK(matching.shape == Shape::matching);
  CHECK(matching.param == 2);
  CHECK(detect_shape(matching_plus_clique_graph(3)).shape == Shape::matching_plus_clique);
  CHECK(detect_shape(cycle_graph(5)).shape == Shape::generic);
  CHECK(std::string(shape_name(Shape::star)) == "star");

  // A star centred at 3 is recognised and relabelled.
  Graph star(4);
  star.add_edge(3, 1);
  star.add_edge(3, 2);
  star.add_edge(3, 4);
  const auto tag = detect_shape(star);
  CHECK(tag.shape == Shape::star);
  CHECK(tag.canonical_graph(star) == star_graph(4));
  // Canonical input keeps the identity.
  const auto identity = detect_shape(star_graph(4));
  for (Vertex v = 1; v <= 4; ++v) CHECK(identity.to_canonical[static_cast<std::size_t>(v)] == v);
}

TEST_CASE("single objects") {
  const auto star9 = detect_shape(star_graph(9));
  CHECK(encode(star9, forest_from_ordering(star_graph(9), std::vector<Vertex>{3, 6, 7, 1, 2, 4, 5, 8, 9})) == "256");
  CHECK(encode(detect_shape(complete_graph(3)), forest_from_key("2 0 1")) == "213");
  CHECK(encode(detect_shape(matching_graph(2)), forest_from_key("0 0 1 0")) == "01");
  CHECK(encode(detect_shape(path_graph(3)), forest_from_key("2 0 2")) == "2(1(.,.),3(.,.))");
  CHECK(encode(detect_shape(path_graph(3)), forest_from_key("0 1 2")) == "1(.,2(.,3(.,.)))");
  CHECK(encode(star9, initial_forest(PeoGraph(star_graph(9)))) == "ε");
  CHECK_THROWS_AS(encode(detect_shape(complete_graph(3)), forest_from_key("0 1")), ForestError);
}

TEST_CASE("separators appear only for values above nine") {
  const auto star11 = detect_shape(star_graph(11));
  const ElimForest broom = forest_from_ordering(star_graph(11), std::vector<Vertex>{11, 2, 1, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(encode(star11, broom) == "10,1");
}

TEST_CASE("object Gray codes") {
  CHECK(gray_code(matching_graph(2)) == std::vector<std::string>{"00", "01", "11", "10"});
  const auto bits = gray_code(matching_graph(4));
  CHECK(bits.size() == 16);
  for (std::size_t k = 1; k < bits.size(); ++k) CHECK(differing_positions(bits[k - 1], bits[k]) == 1);

  const auto trees = gray_code(path_graph(3));
  CHECK(trees.size() == 5);
  CHECK(std::set<std::string>(trees.begin(), trees.end()).size() == 5);

  const auto perms = gray_code(complete_graph(5));
  CHECK(perms.size() == 120);
  for (std::size_t k = 1; k < perms.size(); ++k) CHECK(differing_positions(perms[k - 1], perms[k]) == 2);

  // With k = 2 the clique is a single edge and the graph is a plain matching.
  CHECK(detect_shape(matching_plus_clique_graph(2)).shape == Shape::matching);
  const auto signed_perms = gray_code(matching_plus_clique_graph(3));
  CHECK(signed_perms.size() == 48);
  CHECK(std::set<std::string>(signed_perms.begin(), signed_perms.end()).size() == 48);
  CHECK(signed_perms.front() == "+1+2+3");
  CHECK_THROWS_AS(gray_code(cycle_graph(5)), GraphError);
}
